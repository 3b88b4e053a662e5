//! IO layer for the characteristic-class toolkit: JSON models, file
//! formats, human-readable rendering, and the command implementations the
//! `cherncalc` binary dispatches to.

pub mod commands;
pub mod json;
pub mod text;

/// Runtime options shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub bound: u64,
    pub trials: u32,
    pub budget: u64,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

impl RunConfig {
    pub fn segre_config(&self) -> cherncalc_core::SegreConfig {
        cherncalc_core::SegreConfig {
            seed: self.seed,
            bound: self.bound,
            trials: self.trials,
            groebner: self.groebner_config(),
        }
    }

    pub fn groebner_config(&self) -> cherncalc_core::GroebnerConfig {
        cherncalc_core::GroebnerConfig {
            budget: self.budget,
            gebauer_moller: false,
        }
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            bound: 1009,
            trials: 5,
            budget: 1_000_000,
            format: OutputFormat::Json,
        }
    }
}
