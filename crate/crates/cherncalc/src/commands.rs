//! Subcommand implementations, shared between the binary and the test
//! suites. Each returns the rendered output string.

use std::path::Path;

use cherncalc_core::constructible::{
    cone_multiplicities, eu_decompose, resolve_by_cone_signs, solve_in_basis,
    solve_in_basis_affine, ConstructibleFunction,
};
use cherncalc_core::groebner::{buchberger, MonomialOrder};
use cherncalc_core::hypersurface::{
    family_residual, curve_family_cwma, curve_family_segre, full_report, normal_crossings_cwma,
    normal_crossings_is_mixed,
};
use cherncalc_core::parse::parse_poly;
use cherncalc_core::poly::Ideal;
use cherncalc_core::segre::segre_of_ideal_with_degrees;
use cherncalc_core::{Error, RatPoly};
use num_traits::Zero;

use crate::json::{
    self, ChowClassJson, FamilyJson, GroebnerJson, NormalCrossingsJson, NuJson, ReportJson,
    SegreJson, StrataFileJson,
};
use crate::text;
use crate::{OutputFormat, RunConfig};

/// Everything that can go wrong while running a command, tagged for the
/// process exit code.
#[derive(Debug)]
pub enum CommandError {
    /// Unreadable input file or malformed JSON.
    Io(String),
    Core(Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Core(e)
    }
}

impl std::fmt::Display for CommandError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CommandError::Io(m) => write!(f, "{m}"),
            CommandError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CommandError {
    /// Exit codes: 2 parse, 3 non-homogeneous, 4 Monte Carlo disagreement,
    /// 5 budget exceeded, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Io(_) => 2,
            CommandError::Core(Error::Parse { .. }) => 2,
            CommandError::Core(Error::NonHomogeneous) => 3,
            CommandError::Core(Error::MonteCarloDisagreement { .. }) => 4,
            CommandError::Core(Error::BudgetExceeded { .. }) => 5,
            CommandError::Core(_) => 1,
        }
    }

    /// Machine-readable error payload, written to stderr.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.to_string(),
            "exit_code": self.exit_code(),
        })
        .to_string()
    }
}

pub type CmdResult = Result<String, CommandError>;

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn parse_in_pn(src: &str, n: usize) -> Result<RatPoly, CommandError> {
    Ok(parse_poly(src, n + 1)?)
}

pub fn cmd_report(poly: &str, n: usize, config: &RunConfig) -> CmdResult {
    let f = parse_in_pn(poly, n)?;
    let report = full_report(&f, &config.segre_config())?;
    Ok(match config.format {
        OutputFormat::Json => pretty(&ReportJson::new(&report, config)),
        OutputFormat::Text => text::report(&report),
    })
}

pub fn cmd_segre(gens: &[String], n: usize, config: &RunConfig) -> CmdResult {
    let polys = gens
        .iter()
        .map(|g| parse_in_pn(g, n))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = Ideal::new(n + 1, polys)?;
    let (class, pd) = segre_of_ideal_with_degrees(&ideal, &config.segre_config())?;
    Ok(match config.format {
        OutputFormat::Json => pretty(&SegreJson {
            config: config.into(),
            n,
            projective_degrees: (&pd).into(),
            segre: (&class).into(),
        }),
        OutputFormat::Text => format!(
            "projective degrees: {:?} (generator degree {})\n{}\n",
            pd.degrees(),
            pd.generator_degree(),
            text::class_line("segre", &class)
        ),
    })
}

pub fn cmd_gb(gens: &[String], n: usize, config: &RunConfig) -> CmdResult {
    let polys = gens
        .iter()
        .map(|g| parse_in_pn(g, n))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = Ideal::new(n + 1, polys)?;
    let gb = buchberger(&ideal, MonomialOrder::DegRevLex, &config.groebner_config())?;
    let basis: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
    Ok(match config.format {
        OutputFormat::Json => pretty(&GroebnerJson {
            config: config.into(),
            order: "degrevlex".into(),
            reduced: gb.is_reduced(),
            basis,
        }),
        OutputFormat::Text => basis.join("\n") + "\n",
    })
}

/// Components come as `a:r` pairs, e.g. `1:1,1:1,1:1` for a triangle of
/// reduced lines.
pub fn parse_components(input: &str) -> Result<Vec<(u32, u32)>, CommandError> {
    input.split(',')
        .map(|part| {
            let bad = || {
                CommandError::Core(Error::Parse {
                    position: 0,
                    message: format!("component '{part}' is not of the form a:r"),
                })
            };
            let (a, r) = part.split_once(':').ok_or_else(bad)?;
            Ok((
                a.trim().parse::<u32>().map_err(|_| bad())?,
                r.trim().parse::<u32>().map_err(|_| bad())?,
            ))
        })
        .collect()
}

pub fn cmd_nc(n: usize, components: &[(u32, u32)], config: &RunConfig) -> CmdResult {
    let class = normal_crossings_cwma(n, components)?;
    let mixed = normal_crossings_is_mixed(components);
    Ok(match config.format {
        OutputFormat::Json => pretty(&NormalCrossingsJson {
            config: config.into(),
            n,
            components: components.to_vec(),
            mixed_multiplicities: mixed,
            cwma: (&class).into(),
        }),
        OutputFormat::Text => format!(
            "{}{}\n",
            if mixed {
                "warning: mixed reduced/multiple components; sign rule applied as for non-reduced\n"
            } else {
                ""
            },
            text::class_line("cwma", &class)
        ),
    })
}

pub fn cmd_family(
    n: usize,
    d: u32,
    genus: u32,
    r: u32,
    multiplicities: &[u32],
    config: &RunConfig,
) -> CmdResult {
    let segre = curve_family_segre(n, genus, r, multiplicities)?;
    let cwma = curve_family_cwma(n, genus, r, multiplicities)?;
    let residual = family_residual(n, d, genus, r, multiplicities);
    Ok(match config.format {
        OutputFormat::Json => pretty(&FamilyJson {
            config: config.into(),
            n,
            d,
            genus,
            r,
            multiplicities: multiplicities.to_vec(),
            segre: (&segre).into(),
            cwma: (&cwma).into(),
            residual: residual.to_string(),
            consistent: residual.is_zero(),
        }),
        OutputFormat::Text => format!(
            "{}\n{}\nresidual   {} ({})\n",
            text::class_line("segre", &segre),
            text::class_line("cwma", &cwma),
            residual,
            if residual.is_zero() {
                "consistent"
            } else {
                "inconsistent configuration"
            }
        ),
    })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CommandError> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| CommandError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&data)
        .map_err(|e| CommandError::Io(format!("malformed JSON in {}: {e}", path.display())))
}

pub fn cmd_nu(strata_path: &Path, target_path: &Path, config: &RunConfig) -> CmdResult {
    let strata: StrataFileJson = read_json(strata_path)?;
    let target_json: ChowClassJson = read_json(target_path)?;
    if target_json.n != strata.n {
        return Err(CommandError::Core(Error::RingMismatch {
            left: strata.n,
            right: target_json.n,
        }));
    }
    let target = target_json.to_class()?;
    let poset = strata.poset()?;
    let basis = strata.basis()?;
    let eu = strata.eu_matrix()?;
    // Pushing the stratum classes into A_*(P^n) can make an honest basis
    // rank deficient; the cone sign law (integer Euler coefficients of
    // sign (-1)^codim) then still pins the geometric solution.
    let (nu, resolution): (ConstructibleFunction, &str) = match solve_in_basis(&target, &basis) {
        Ok(nu) => (nu, "direct"),
        Err(Error::RankDeficient { .. }) => {
            let family = solve_in_basis_affine(&target, &basis)?;
            (
                resolve_by_cone_signs(&family, &eu, &poset)?,
                "cone-sign-law",
            )
        }
        Err(e) => return Err(e.into()),
    };
    let coeffs = eu_decompose(&nu, &eu, &poset)?;
    let mults = cone_multiplicities(&coeffs)?;

    let labels: Vec<String> = strata.strata.iter().map(|s| s.label.clone()).collect();
    let eu_labels: Vec<String> = eu.strata();
    Ok(match config.format {
        OutputFormat::Json => pretty(&NuJson {
            config: config.into(),
            resolution: resolution.to_string(),
            nu: json::function_to_map(&nu, &labels),
            eu_coefficients: json::function_to_map(&coeffs, &eu_labels),
            multiplicities: mults.iter().map(Into::into).collect(),
        }),
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("resolution: {resolution}\n"));
            out.push_str("nu:\n");
            for l in &labels {
                out.push_str(&format!("  {l:<4} {}\n", nu.value(l)));
            }
            out.push_str("Euler-obstruction coefficients:\n");
            for l in &eu_labels {
                out.push_str(&format!("  {l:<4} {}\n", coeffs.value(l)));
            }
            out.push_str("normal-cone multiplicities:\n");
            for m in &mults {
                out.push_str(&format!(
                    "  {:<4} {} (sign {})\n",
                    m.label, m.multiplicity, m.sign
                ));
            }
            out
        }
    })
}
