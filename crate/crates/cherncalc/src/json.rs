//! Serde models for every file format and JSON payload. All class
//! coefficients and other rational quantities are exact decimal or `p/q`
//! strings; no floating point appears in any input or output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use cherncalc_core::constructible::{ConeMultiplicity, ConstructibleFunction, EuMatrix, StrataPoset};
use cherncalc_core::parse::parse_rational;
use cherncalc_core::{ChowClass, Error, HypersurfaceReport, ProjectiveDegrees};

use crate::RunConfig;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigJson {
    pub seed: u64,
    pub bound: u64,
    pub trials: u32,
    pub budget: u64,
}

impl From<&RunConfig> for ConfigJson {
    fn from(c: &RunConfig) -> Self {
        ConfigJson {
            seed: c.seed,
            bound: c.bound,
            trials: c.trials,
            budget: c.budget,
        }
    }
}

/// `{"n": 2, "coeffs": ["0", "3", "1"]}` with coefficient `k` belonging to `h^k`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChowClassJson {
    pub n: usize,
    pub coeffs: Vec<String>,
}

impl From<&ChowClass> for ChowClassJson {
    fn from(c: &ChowClass) -> Self {
        ChowClassJson {
            n: c.ambient_dim(),
            coeffs: c.coeffs().iter().map(|q| q.to_string()).collect(),
        }
    }
}

impl ChowClassJson {
    pub fn to_class(&self) -> Result<ChowClass, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        ChowClass::from_coeffs(self.n, coeffs)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProjectiveDegreesJson {
    pub generator_degree: u32,
    pub degrees: Vec<u64>,
}

impl From<&ProjectiveDegrees> for ProjectiveDegreesJson {
    fn from(pd: &ProjectiveDegrees) -> Self {
        ProjectiveDegreesJson {
            generator_degree: pd.generator_degree(),
            degrees: pd.degrees().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub config: ConfigJson,
    pub n: usize,
    pub d: u32,
    pub dim_y: Option<usize>,
    pub projective_degrees: ProjectiveDegreesJson,
    pub segre: ChowClassJson,
    pub cwma: ChowClassJson,
    pub mu: ChowClassJson,
    pub fulton: ChowClassJson,
    pub csm: ChowClassJson,
    pub milnor: ChowClassJson,
    pub chi: String,
}

impl ReportJson {
    pub fn new(report: &HypersurfaceReport, config: &RunConfig) -> Self {
        ReportJson {
            config: config.into(),
            n: report.n,
            d: report.d,
            dim_y: report.dim_y,
            projective_degrees: (&report.projective_degrees).into(),
            segre: (&report.segre).into(),
            cwma: (&report.cwma).into(),
            mu: (&report.mu).into(),
            fulton: (&report.fulton).into(),
            csm: (&report.csm).into(),
            milnor: (&report.milnor).into(),
            chi: report.chi.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SegreJson {
    pub config: ConfigJson,
    pub n: usize,
    pub projective_degrees: ProjectiveDegreesJson,
    pub segre: ChowClassJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerJson {
    pub config: ConfigJson,
    pub order: String,
    pub reduced: bool,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalCrossingsJson {
    pub config: ConfigJson,
    pub n: usize,
    pub components: Vec<(u32, u32)>,
    pub mixed_multiplicities: bool,
    pub cwma: ChowClassJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyJson {
    pub config: ConfigJson,
    pub n: usize,
    pub d: u32,
    pub genus: u32,
    pub r: u32,
    pub multiplicities: Vec<u32>,
    pub segre: ChowClassJson,
    pub cwma: ChowClassJson,
    pub residual: String,
    pub consistent: bool,
}

/// Stratification input file:
/// `{"n": 9, "strata": [{"label": "C", "dim": 7}, ...],
///   "closure": [["P", "C"], ...], "csm": {"C": ["0", ...], ...},
///   "eu": {"C": {"C": "1", ...}, ...}}`
/// Closure pairs read `[smaller, larger]`; `csm` arrays list `h^k`
/// coefficients; `eu` rows exist only for the strata with known
/// Euler-obstruction values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrataFileJson {
    pub n: usize,
    pub strata: Vec<StratumJson>,
    #[serde(default)]
    pub closure: Vec<(String, String)>,
    pub csm: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub eu: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StratumJson {
    pub label: String,
    pub dim: usize,
}

impl StrataFileJson {
    pub fn poset(&self) -> Result<StrataPoset, Error> {
        StrataPoset::new(
            self.strata
                .iter()
                .map(|s| (s.label.clone(), s.dim))
                .collect(),
            &self.closure,
        )
    }

    /// Basis in file order, as required by the linear solver.
    pub fn basis(&self) -> Result<Vec<(String, ChowClass)>, Error> {
        self.strata
            .iter()
            .map(|s| {
                let coeffs = self.csm.get(&s.label).ok_or_else(|| Error::BadPoset {
                    detail: format!("stratum {} has no csm entry", s.label),
                })?;
                let class = ChowClassJson {
                    n: self.n,
                    coeffs: coeffs.clone(),
                }
                .to_class()?;
                Ok((s.label.clone(), class))
            })
            .collect()
    }

    pub fn eu_matrix(&self) -> Result<EuMatrix, Error> {
        let mut eu = EuMatrix::new();
        for (z, row) in &self.eu {
            for (w, v) in row {
                eu.set(z.clone(), w.clone(), parse_rational(v)?);
            }
        }
        Ok(eu)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityJson {
    pub label: String,
    pub multiplicity: u64,
    pub sign: i32,
}

impl From<&ConeMultiplicity> for MultiplicityJson {
    fn from(m: &ConeMultiplicity) -> Self {
        MultiplicityJson {
            label: m.label.clone(),
            multiplicity: m.multiplicity,
            sign: m.sign,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NuJson {
    pub config: ConfigJson,
    /// "direct" for a full-rank solve, "cone-sign-law" when a pushforward
    /// relation had to be resolved by the multiplicity sign law.
    pub resolution: String,
    pub nu: BTreeMap<String, String>,
    pub eu_coefficients: BTreeMap<String, String>,
    pub multiplicities: Vec<MultiplicityJson>,
}

pub fn function_to_map(f: &ConstructibleFunction, labels: &[String]) -> BTreeMap<String, String> {
    labels
        .iter()
        .map(|l| (l.clone(), f.value(l).to_string()))
        .collect()
}
