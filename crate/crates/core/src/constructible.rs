//! Linear algebra over stratification posets: express a class in a basis of
//! stratum classes, decompose constructible functions in the local
//! Euler-obstruction basis, and read off normal-cone multiplicities.
//!
//! Stratum classes and Euler-obstruction values are input data; nothing
//! here recomputes them.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::Rat;

/// Stratification poset: labelled strata with dimensions and the closure
/// partial order (`W <= Z` means `W` lies in the closure of `Z`).
#[derive(Debug, Clone)]
pub struct StrataPoset {
    labels: Vec<String>,
    dims: Vec<usize>,
    /// `leq[w][z]` is true when stratum `w` lies in the closure of `z`.
    leq: Vec<Vec<bool>>,
}

impl StrataPoset {
    /// Build from `(label, dim)` pairs and closure relations
    /// `(smaller, larger)`; the transitive closure is taken internally.
    pub fn new(strata: Vec<(String, usize)>, closure: &[(String, String)]) -> Result<Self> {
        if strata.is_empty() {
            return Err(Error::EmptyInput);
        }
        let labels: Vec<String> = strata.iter().map(|(l, _)| l.clone()).collect();
        let dims: Vec<usize> = strata.iter().map(|(_, d)| *d).collect();
        let k = labels.len();
        let index = |l: &str| -> Result<usize> {
            labels.iter().position(|x| x == l).ok_or_else(|| Error::BadPoset {
                detail: alloc::format!("unknown stratum label {l}"),
            })
        };
        let mut leq = vec![vec![false; k]; k];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (small, large) in closure {
            let w = index(small)?;
            let z = index(large)?;
            if w == z || dims[w] >= dims[z] {
                return Err(Error::BadPoset {
                    detail: alloc::format!(
                        "closure relation {small} <= {large} incompatible with dimensions"
                    ),
                });
            }
            leq[w][z] = true;
        }
        // Floyd-Warshall transitive closure
        for m in 0..k {
            let via = leq[m].clone();
            for row in leq.iter_mut() {
                if row[m] {
                    for (dst, &src) in row.iter_mut().zip(&via) {
                        *dst |= src;
                    }
                }
            }
        }
        for w in 0..k {
            for z in 0..k {
                if w != z && leq[w][z] && dims[w] >= dims[z] {
                    return Err(Error::BadPoset {
                        detail: alloc::format!(
                            "transitive closure makes {} <= {} but dimensions do not drop",
                            labels[w], labels[z]
                        ),
                    });
                }
            }
        }
        Ok(StrataPoset { labels, dims, leq })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self, label: &str) -> Option<usize> {
        self.position(label).map(|i| self.dims[i])
    }

    fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Is `small` contained in the closure of `large`?
    pub fn lies_below(&self, small: &str, large: &str) -> bool {
        match (self.position(small), self.position(large)) {
            (Some(w), Some(z)) => self.leq[w][z],
            _ => false,
        }
    }
}

/// Rational value at the general point of each stratum; finite support.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstructibleFunction {
    values: BTreeMap<String, Rat>,
}

impl ConstructibleFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_values(values: impl IntoIterator<Item = (String, Rat)>) -> Self {
        ConstructibleFunction {
            values: values
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn value(&self, label: &str) -> Rat {
        self.values.get(label).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set(&mut self, label: String, value: Rat) {
        if value.is_zero() {
            self.values.remove(&label);
        } else {
            self.values.insert(label, value);
        }
    }

    /// Supported strata in label order.
    pub fn support(&self) -> impl Iterator<Item = (&String, &Rat)> {
        self.values.iter()
    }
}

/// Euler-obstruction table: `entry(z, w)` is the value of `Eu_{closure(z)}`
/// at the general point of `w`.
#[derive(Debug, Clone, Default)]
pub struct EuMatrix {
    entries: BTreeMap<String, BTreeMap<String, Rat>>,
}

impl EuMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, z: String, w: String, value: Rat) {
        self.entries.entry(z).or_default().insert(w, value);
    }

    pub fn value(&self, z: &str, w: &str) -> Rat {
        self.entries
            .get(z)
            .and_then(|row| row.get(w).cloned())
            .unwrap_or_else(Rat::zero)
    }

    /// Strata that carry an Euler-obstruction row, in label order.
    pub fn strata(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    /// Unitriangularity on the poset: `Eu_z(z) = 1` and `Eu_z(w) = 0`
    /// unless `w` lies in the closure of `z`.
    pub fn validate(&self, poset: &StrataPoset) -> Result<()> {
        for (z, row) in &self.entries {
            if poset.dim(z).is_none() {
                return Err(Error::BadPoset {
                    detail: alloc::format!("Euler table row {z} is not a stratum"),
                });
            }
            let diag = row.get(z).cloned().unwrap_or_else(Rat::zero);
            if !diag.is_one() {
                return Err(Error::NotUnitriangular {
                    detail: alloc::format!("Eu_{z}({z}) = {diag}, expected 1"),
                });
            }
            for (w, v) in row {
                if v.is_zero() || w == z {
                    continue;
                }
                if !poset.lies_below(w, z) {
                    return Err(Error::NotUnitriangular {
                        detail: alloc::format!(
                            "Eu_{z}({w}) = {v} but {w} is not in the closure of {z}"
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

struct Reduced {
    /// reduced row echelon form of the augmented matrix
    m: Vec<Vec<Rat>>,
    pivot_cols: Vec<usize>,
    free_cols: Vec<usize>,
}

fn row_reduce(target: &ChowClass, basis: &[(String, ChowClass)]) -> Result<Reduced> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let rows = target.ambient_dim() + 1;
    let cols = basis.len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|k| {
            let mut row: Vec<Rat> = basis.iter().map(|(_, b)| b.coeff(k)).collect();
            row.push(target.coeff(k));
            row
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut free_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            free_cols.push(col);
            continue;
        };
        m.swap(row, pr);
        let pv = m[row][col].clone();
        for entry in &mut m[row][col..] {
            *entry = &*entry / &pv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (dst, src) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                    *dst -= &f * src;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            free_cols.extend(col + 1..cols);
            break;
        }
    }
    // any leftover nonzero right-hand side is an inconsistency
    let rank = pivot_cols.len();
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            let residual: Vec<String> = (rank..rows).map(|rr| m[rr][cols].to_string()).collect();
            return Err(Error::InconsistentSystem {
                residual: residual.join(", "),
            });
        }
    }
    Ok(Reduced {
        m,
        pivot_cols,
        free_cols,
    })
}

/// Solve `target = sum_z x_z basis_z` exactly. The basis must be linearly
/// independent (checked by rank) and the system consistent; both failure
/// modes are reported with diagnostics.
pub fn solve_in_basis(
    target: &ChowClass,
    basis: &[(String, ChowClass)],
) -> Result<ConstructibleFunction> {
    let reduced = row_reduce(target, basis)?;
    if !reduced.free_cols.is_empty() {
        return Err(Error::RankDeficient {
            rank: reduced.pivot_cols.len(),
            expected: basis.len(),
        });
    }
    let cols = basis.len();
    let mut out = ConstructibleFunction::new();
    for (i, (label, _)) in basis.iter().enumerate() {
        out.set(label.clone(), reduced.m[i][cols].clone());
    }
    Ok(out)
}

/// The full affine solution set of `target = sum_z x_z basis_z`: one
/// particular solution (free coefficients set to zero) plus a basis of the
/// homogeneous null space. Errors only when the system is inconsistent.
pub struct BasisSolutions {
    pub particular: ConstructibleFunction,
    pub null_directions: Vec<ConstructibleFunction>,
}

pub fn solve_in_basis_affine(
    target: &ChowClass,
    basis: &[(String, ChowClass)],
) -> Result<BasisSolutions> {
    let reduced = row_reduce(target, basis)?;
    let cols = basis.len();
    let mut particular = ConstructibleFunction::new();
    for (row, &col) in reduced.pivot_cols.iter().enumerate() {
        particular.set(basis[col].0.clone(), reduced.m[row][cols].clone());
    }
    let null_directions = reduced
        .free_cols
        .iter()
        .map(|&free| {
            let mut dir = ConstructibleFunction::new();
            dir.set(basis[free].0.clone(), Rat::one());
            for (row, &col) in reduced.pivot_cols.iter().enumerate() {
                dir.set(basis[col].0.clone(), -reduced.m[row][free].clone());
            }
            dir
        })
        .collect();
    Ok(BasisSolutions {
        particular,
        null_directions,
    })
}

/// Pick the member of a one-parameter solution family whose
/// Euler-obstruction coefficients obey the normal-cone multiplicity law:
/// each coefficient is an integer of sign `(-1)^(dim Y - dim Z)` (or zero),
/// `dim Y` being the top stratum dimension. Pushing stratum classes into
/// the ambient projective space can collapse an otherwise independent
/// family; this law is what still pins the geometric solution.
pub fn resolve_by_cone_signs(
    solutions: &BasisSolutions,
    eu: &EuMatrix,
    poset: &StrataPoset,
) -> Result<ConstructibleFunction> {
    match solutions.null_directions.len() {
        0 => return Ok(solutions.particular.clone()),
        1 => {}
        k => {
            return Err(Error::RankDeficient {
                rank: poset.labels().len() - k,
                expected: poset.labels().len(),
            })
        }
    }
    let direction = &solutions.null_directions[0];
    let lp = eu_decompose(&solutions.particular, eu, poset)?;
    let ld = eu_decompose(direction, eu, poset)?;
    let strata = eu.strata();
    let dim_y = poset
        .labels()
        .iter()
        .filter_map(|l| poset.dim(l))
        .max()
        .unwrap_or(0);

    // sign constraints s_z (lp_z + t ld_z) >= 0 give a rational interval
    let mut lower: Option<Rat> = None;
    let mut upper: Option<Rat> = None;
    let mut anchor: Option<&String> = None;
    for z in &strata {
        let s_pos = (dim_y - poset.dim(z).unwrap()).is_multiple_of(2);
        let (p, d) = (lp.value(z), ld.value(z));
        let (p, d) = if s_pos { (p, d) } else { (-p, -d) };
        if d.is_zero() {
            if p.is_negative() {
                return Err(Error::InconsistentSystem {
                    residual: alloc::format!("sign law fails at {z} for every family member"),
                });
            }
            continue;
        }
        anchor = anchor.or(Some(z));
        // p + t d >= 0
        let bound = -p / d.clone();
        if d.is_positive() {
            lower = Some(match lower {
                None => bound,
                Some(lo) => lo.max(bound),
            });
        } else {
            upper = Some(match upper {
                None => bound,
                Some(hi) => hi.min(bound),
            });
        }
    }
    let (Some(lower), Some(upper), Some(anchor)) = (lower, upper, anchor) else {
        return Err(Error::InconsistentSystem {
            residual: "sign law does not bound the solution family".into(),
        });
    };

    // the anchor coefficient is integral and confined to a bounded interval;
    // enumerate its possible values
    let (ap, ad) = (lp.value(anchor), ld.value(anchor));
    let mut candidates: Vec<Rat> = Vec::new();
    let lo_val = &ap + &ad * lower.clone();
    let hi_val = &ap + &ad * upper.clone();
    let (lo_val, hi_val) = if lo_val <= hi_val {
        (lo_val, hi_val)
    } else {
        (hi_val, lo_val)
    };
    let mut v = lo_val.ceil().to_integer();
    while Rat::from_integer(v.clone()) <= hi_val {
        let t = (Rat::from_integer(v.clone()) - &ap) / ad.clone();
        if lower <= t && t <= upper {
            let ok = strata.iter().all(|z| {
                let val = lp.value(z) + ld.value(z) * t.clone();
                if !val.is_integer() {
                    return false;
                }
                let s_pos = (dim_y - poset.dim(z).unwrap()).is_multiple_of(2);
                if s_pos {
                    !val.is_negative()
                } else {
                    !val.is_positive()
                }
            });
            if ok {
                candidates.push(t);
            }
        }
        v += 1;
    }
    candidates.dedup();
    match candidates.as_slice() {
        [t] => {
            let mut out = solutions.particular.clone();
            for (label, v) in direction.support() {
                out.set(label.clone(), out.value(label) + v * t);
            }
            Ok(out)
        }
        [] => Err(Error::InconsistentSystem {
            residual: "no family member satisfies the cone sign law".into(),
        }),
        many => Err(Error::InconsistentSystem {
            residual: alloc::format!("{} family members satisfy the cone sign law", many.len()),
        }),
    }
}

/// Write `nu` as `sum_z l_z Eu_z` by back-substitution down the poset: the
/// strata carrying Euler rows are processed from top dimension down, and
/// every stratum above one of them must itself carry a row.
pub fn eu_decompose(
    nu: &ConstructibleFunction,
    eu: &EuMatrix,
    poset: &StrataPoset,
) -> Result<ConstructibleFunction> {
    eu.validate(poset)?;
    let strata = eu.strata();
    if strata.is_empty() {
        return Err(Error::EmptyInput);
    }
    for z in &strata {
        for above in poset.labels() {
            if poset.lies_below(z, above) && z != above && !strata.contains(above) {
                return Err(Error::BadPoset {
                    detail: alloc::format!(
                        "stratum {above} dominates {z} but has no Euler row"
                    ),
                });
            }
        }
    }
    let mut order: Vec<String> = strata.clone();
    order.sort_by(|a, b| {
        poset
            .dim(b)
            .cmp(&poset.dim(a))
            .then_with(|| a.cmp(b))
    });
    let mut coeffs = ConstructibleFunction::new();
    for z in &order {
        let mut acc = nu.value(z);
        for w in &order {
            if w != z && poset.lies_below(z, w) {
                acc -= coeffs.value(w) * eu.value(w, z);
            }
        }
        coeffs.set(z.clone(), acc);
    }
    Ok(coeffs)
}

/// Normal-cone multiplicity with the sign of its Euler-basis coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeMultiplicity {
    pub label: String,
    pub multiplicity: u64,
    pub sign: i32,
}

/// Multiplicities are the absolute values of the (integral) Euler-basis
/// coefficients; the sign pattern is reported alongside.
pub fn cone_multiplicities(coeffs: &ConstructibleFunction) -> Result<Vec<ConeMultiplicity>> {
    let mut out = Vec::new();
    for (label, value) in coeffs.support() {
        if !value.is_integer() {
            return Err(Error::NonIntegralCoefficient {
                label: label.clone(),
                value: value.to_string(),
            });
        }
        let int = value.to_integer();
        let (mult, sign) = if int.is_negative() {
            ((-int.clone()).try_into().unwrap_or(u64::MAX), -1)
        } else {
            (int.clone().try_into().unwrap_or(u64::MAX), 1)
        };
        if mult > 0 {
            out.push(ConeMultiplicity {
                label: label.clone(),
                multiplicity: mult,
                sign,
            });
        }
    }
    Ok(out)
}
