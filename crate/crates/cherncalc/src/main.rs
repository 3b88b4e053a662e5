use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cherncalc::commands::{self, CommandError};
use cherncalc::{OutputFormat, RunConfig};

/// Exact characteristic classes of singular hypersurfaces in projective
/// space: Segre classes via projective degrees, weighted Chern-Mather,
/// mu, Fulton, Chern-Schwartz-MacPherson and Milnor classes, plus a
/// constructible-function solver for normal-cone multiplicities.
#[derive(Parser)]
#[command(name = "cherncalc", version)]
struct Cli {
    /// Master seed for all random draws; identical seeds give byte-identical output
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random coefficients are drawn from [-bound, bound]
    #[arg(long, global = true, default_value_t = 1009)]
    bound: u64,
    /// Monte Carlo draws before reporting disagreement (at least 2)
    #[arg(long, global = true, default_value_t = 5)]
    trials: u32,
    /// Reduction-step budget for the Grobner engine
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    /// Output format: json or text
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full class report for a homogeneous polynomial in P^n
    Report {
        /// Ambient dimension n (variables x0..xn, aliases x, y, z, w)
        #[arg(long)]
        n: usize,
        /// The polynomial, e.g. "y^2*z - x^2*z - x^3"
        poly: String,
    },
    /// Segre class of the subscheme cut out by an ideal
    Segre {
        #[arg(long)]
        n: usize,
        /// Ideal generators
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Reduced degrevlex Grobner basis of an ideal
    Gb {
        #[arg(long)]
        n: usize,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Closed-form weighted Chern-Mather class of a normal-crossings divisor
    Nc {
        #[arg(long)]
        n: usize,
        /// Components as degree:multiplicity pairs, e.g. 1:1,1:1,1:1
        #[arg(long)]
        components: String,
    },
    /// Closed forms for a singular scheme supported on a curve, with the
    /// numerical consistency residual
    Family {
        #[arg(long)]
        n: usize,
        /// Degree of the hypersurface
        #[arg(long)]
        d: u32,
        /// Genus of the supporting curve
        #[arg(long, default_value_t = 0)]
        g: u32,
        /// Degree of the supporting curve
        #[arg(long)]
        r: u32,
        /// Multiplicities at the special points, comma separated (each >= 2)
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
    },
    /// Solve for stratum coefficients and normal-cone multiplicities from a
    /// stratification file and a target class
    Nu {
        /// Stratification JSON (strata, closure, csm basis, eu tables)
        strata: PathBuf,
        /// Target class JSON ({"n": ..., "coeffs": [...]})
        #[arg(long)]
        target: PathBuf,
    },
}

fn run(cli: &Cli) -> Result<String, CommandError> {
    let format = match cli.format.as_str() {
        "json" => OutputFormat::Json,
        "text" => OutputFormat::Text,
        other => {
            return Err(CommandError::Io(format!(
                "unknown format '{other}', expected json or text"
            )))
        }
    };
    if cli.bound == 0 || cli.trials < 2 {
        return Err(CommandError::Io(
            "need --bound >= 1 and --trials >= 2".into(),
        ));
    }
    let config = RunConfig {
        seed: cli.seed,
        bound: cli.bound,
        trials: cli.trials,
        budget: cli.budget,
        format,
    };
    match &cli.command {
        Command::Report { n, poly } => commands::cmd_report(poly, *n, &config),
        Command::Segre { n, gens } => commands::cmd_segre(gens, *n, &config),
        Command::Gb { n, gens } => commands::cmd_gb(gens, *n, &config),
        Command::Nc { n, components } => {
            let comps = commands::parse_components(components)?;
            commands::cmd_nc(*n, &comps, &config)
        }
        Command::Family { n, d, g, r, m } => commands::cmd_family(*n, *d, *g, *r, m, &config),
        Command::Nu { strata, target } => commands::cmd_nu(strata, target, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
