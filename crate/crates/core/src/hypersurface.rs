//! End-to-end pipeline for a hypersurface `X = V(F)` in `P^n` and the
//! closed-form class evaluators that go with it.
//!
//! From a homogeneous `F` the pipeline produces the Segre class of the
//! singularity subscheme `Y` (cut out by the partial derivatives), the
//! weighted Chern-Mather class of `Y`, the mu-class, the Fulton class of
//! `X`, the Chern-Schwartz-MacPherson class, the Milnor class
//! `c_SM - c_F`, and the Euler characteristic as the degree of `c_SM`.
//!
//! The key transforms, with `L = O(d)` and `h` the hyperplane class:
//!
//! * `c_wMa(Y) = (-1)^(dim Y) dual_twist( c(T*P^n (x) L) cap s(Y, P^n), L )`
//! * `mu_L(Y)  = (-1)^(dim Y) dual_twist( c_wMa(Y), L )`
//! * `c_SM(X)  = c_F(X) + (-1)^(n - dim Y) c(L)^(-1) cap c_wMa(Y)`

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chow::{ctpn_twisted, line_power, ChowClass, LineBundle};
use crate::error::{Error, Result};
use crate::groebner::{projective_dimension, saturate_irrelevant};
use crate::poly::{Ideal, RatPoly};
use crate::segre::{segre_of_ideal_with_degrees, ProjectiveDegrees, SegreConfig};
use crate::Rat;

/// One component of a normal cone: its support, geometric multiplicity and
/// (caller-supplied) Chern-Mather class.
#[derive(Debug, Clone)]
pub struct ConeComponent {
    pub label: String,
    pub dim: usize,
    pub multiplicity: u64,
    pub mather_class: ChowClass,
}

/// Every class the pipeline computes for one input polynomial.
#[derive(Debug, Clone)]
pub struct HypersurfaceReport {
    pub n: usize,
    pub d: u32,
    pub jacobian: Ideal,
    /// Dimension of the singularity subscheme; `None` when it is empty.
    pub dim_y: Option<usize>,
    pub projective_degrees: ProjectiveDegrees,
    pub segre: ChowClass,
    pub cwma: ChowClass,
    pub mu: ChowClass,
    pub fulton: ChowClass,
    pub csm: ChowClass,
    pub milnor: ChowClass,
    pub chi: Rat,
}

/// Ideal of partial derivatives of a homogeneous polynomial (the
/// singularity subscheme of `V(F)`; it contains `F` by the Euler relation).
/// Vanishing partials are dropped.
pub fn singularity_scheme(f: &RatPoly) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.homogeneous_degree()?;
    if d == 0 {
        return Err(Error::InvalidParameter {
            detail: "hypersurface degree must be at least 1".to_string(),
        });
    }
    let partials: Vec<RatPoly> = (0..f.nvars())
        .map(|i| f.partial(i))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(f.nvars(), partials)
}

/// Class of the virtual tangent bundle of a degree-`d` hypersurface in
/// `P^n`: `(1 + h)^(n+1) d h / (1 + d h)`, truncated.
pub fn fulton_class(n: usize, d: u32) -> ChowClass {
    let ctpn = line_power(n, 1, n + 1);
    let x = ChowClass::hyperplane_power(n, 1).scale(&Rat::from_integer(BigInt::from(d)));
    let inv = line_power(n, d as i64, 1).inverse_unit().expect("unit");
    ctpn.mul(&x).unwrap().mul(&inv).unwrap()
}

/// Weighted Chern-Mather class of the singularity subscheme from its Segre
/// class: `(-1)^(dim Y) dual_twist( c(T*P^n (x) O(d)) * s, O(d) )`.
pub fn weighted_mather(segre: &ChowClass, d: u32, dim_y: usize) -> ChowClass {
    let n = segre.ambient_dim();
    let bundle = LineBundle::new(d as i64);
    let transformed = ctpn_twisted(n, d as i64)
        .mul(segre)
        .unwrap()
        .dual_twist(&bundle);
    signed(transformed, dim_y)
}

/// The mu-class from the weighted Chern-Mather class:
/// `(-1)^(dim Y) dual_twist( c_wMa, O(d) )`. Because `dual_twist` is an
/// involution this inverts `weighted_mather` back to the twisted transform
/// of the Segre class.
pub fn mu_class(cwma: &ChowClass, d: u32, dim_y: usize) -> ChowClass {
    signed(cwma.dual_twist(&LineBundle::new(d as i64)), dim_y)
}

fn signed(class: ChowClass, parity: usize) -> ChowClass {
    if parity % 2 == 1 {
        class.neg()
    } else {
        class
    }
}

/// Chern-Schwartz-MacPherson class and Milnor class:
/// `c_SM = c_F + (-1)^(n - dim Y) (1 + d h)^(-1) c_wMa`, Milnor `= c_SM - c_F`.
pub fn csm_and_milnor(
    fulton: &ChowClass,
    cwma: &ChowClass,
    d: u32,
    dim_y: usize,
) -> (ChowClass, ChowClass) {
    let n = fulton.ambient_dim();
    let inv = line_power(n, d as i64, 1).inverse_unit().expect("unit");
    let milnor = signed(inv.mul(cwma).unwrap(), n - dim_y);
    let csm = fulton.add(&milnor).unwrap();
    (csm, milnor)
}

/// Weighted Chern-Mather class from normal-cone data:
/// `sum_i (-1)^(dim Y - dim Y_i) m_i c_Ma(Y_i)`.
pub fn assemble_cwma(components: &[ConeComponent], dim_y: usize) -> Result<ChowClass> {
    if components.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = components[0].mather_class.ambient_dim();
    let mut acc = ChowClass::zero(n);
    for comp in components {
        if comp.multiplicity == 0 || comp.dim > dim_y {
            return Err(Error::InvalidParameter {
                detail: alloc::format!(
                    "component {}: multiplicity must be >= 1 and dim <= {dim_y}",
                    comp.label
                ),
            });
        }
        let m = Rat::from_integer(BigInt::from(comp.multiplicity));
        acc = acc.add(&signed(comp.mather_class.scale(&m), dim_y - comp.dim))?;
    }
    Ok(acc)
}

/// True when a normal-crossings configuration mixes reduced and multiple
/// components; the sign rule below is only stated for the unmixed cases.
pub fn normal_crossings_is_mixed(components: &[(u32, u32)]) -> bool {
    let any_reduced = components.iter().any(|&(_, r)| r == 1);
    let any_multiple = components.iter().any(|&(_, r)| r > 1);
    any_reduced && any_multiple
}

/// Closed form for the weighted Chern-Mather class of the singularity
/// subscheme of a normal-crossings divisor whose components are smooth
/// hypersurfaces of degrees `a_i` with multiplicities `r_i`:
/// `+- c(TP^n) (1 - (1 + [X]) / prod(1 + a_i h))`, `+` iff all `r_i = 1`.
pub fn normal_crossings_cwma(n: usize, components: &[(u32, u32)]) -> Result<ChowClass> {
    if components.is_empty() {
        return Err(Error::EmptyInput);
    }
    for &(a, r) in components {
        if a == 0 || r == 0 {
            return Err(Error::InvalidParameter {
                detail: "normal crossings components need a >= 1 and r >= 1".to_string(),
            });
        }
    }
    let reduced = components.iter().all(|&(_, r)| r == 1);
    let total: i64 = components.iter().map(|&(a, r)| a as i64 * r as i64).sum();
    let mut denominator = ChowClass::one(n);
    for &(a, _) in components {
        denominator = denominator.mul(&line_power(n, a as i64, 1)).unwrap();
    }
    let fraction = line_power(n, total, 1)
        .mul(&denominator.inverse_unit()?)
        .unwrap();
    let inner = ChowClass::one(n).sub(&fraction).unwrap();
    let class = line_power(n, 1, n + 1).mul(&inner).unwrap();
    Ok(if reduced { class } else { class.neg() })
}

/// Weighted Chern-Mather class of `Y = (r X) + Y'` where `Y'` is the
/// singularity subscheme of the degree-`d` hypersurface `X`:
/// `r c_F(X) + (-1)^gap (1 + (r+1) d h) / (1 + d h) cap c_wMa(Y')`,
/// `gap = dim X - dim Y'`.
pub fn residual_cwma(
    r: u64,
    fulton: &ChowClass,
    cwma_yprime: &ChowClass,
    d: u32,
    dim_gap: usize,
) -> Result<ChowClass> {
    let n = fulton.ambient_dim();
    let first = fulton.scale(&Rat::from_integer(BigInt::from(r)));
    let ratio = line_power(n, (r as i64 + 1) * d as i64, 1)
        .mul(&line_power(n, d as i64, 1).inverse_unit()?)
        .unwrap();
    let second = signed(ratio.mul(cwma_yprime)?, dim_gap);
    first.add(&second)
}

fn check_family(n: usize, r: u32, multiplicities: &[u32]) -> Result<()> {
    if n < 2 || r == 0 || multiplicities.iter().any(|&m| m < 2) {
        return Err(Error::InvalidParameter {
            detail: "curve family needs n >= 2, r >= 1 and every m_i >= 2".to_string(),
        });
    }
    Ok(())
}

/// Pushforward of the Segre class of a singularity subscheme supported on a
/// nonsingular curve of genus `g` and degree `r` with `s` special points of
/// multiplicities `m_i`:
/// `r [P^1] + ( s(n-1) + 2 - 2g - r(n+1) + sum((m_i-1)^n - n(m_i-1)) ) [P^0]`.
pub fn curve_family_segre(
    n: usize,
    genus: u32,
    r: u32,
    multiplicities: &[u32],
) -> Result<ChowClass> {
    check_family(n, r, multiplicities)?;
    let s = multiplicities.len() as i64;
    let mut coeff = BigInt::from(
        s * (n as i64 - 1) + 2 - 2 * genus as i64 - r as i64 * (n as i64 + 1),
    );
    for &m in multiplicities {
        let b = BigInt::from(m - 1);
        coeff += num_traits::pow(b.clone(), n) - BigInt::from(n as i64) * b;
    }
    curve_class(n, r, coeff)
}

/// Closed form for the weighted Chern-Mather class of the same family:
/// `r [P^1] + ( 2 - 2g - sum((m_i-1)^n - (m_i-1)) ) [P^0]`.
pub fn curve_family_cwma(
    n: usize,
    genus: u32,
    r: u32,
    multiplicities: &[u32],
) -> Result<ChowClass> {
    check_family(n, r, multiplicities)?;
    let mut coeff = BigInt::from(2i64 - 2 * genus as i64);
    for &m in multiplicities {
        let b = BigInt::from(m - 1);
        coeff -= num_traits::pow(b.clone(), n) - b;
    }
    curve_class(n, r, coeff)
}

fn curve_class(n: usize, r: u32, point_coeff: BigInt) -> Result<ChowClass> {
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n - 1] = Rat::from_integer(BigInt::from(r));
    coeffs[n] = Rat::from_integer(point_coeff);
    ChowClass::from_coeffs(n, coeffs)
}

/// Consistency residual of the curve family:
/// `(n-1)((d-2) r - sum(m_i - 2)) - 4(g + r - 1)`; zero iff the
/// configuration is numerically possible.
pub fn family_residual(n: usize, d: u32, genus: u32, r: u32, multiplicities: &[u32]) -> Rat {
    let mut inner = BigInt::from(d as i64 - 2) * BigInt::from(r);
    for &m in multiplicities {
        inner -= BigInt::from(m as i64 - 2);
    }
    let residual = BigInt::from(n as i64 - 1) * inner
        - BigInt::from(4) * BigInt::from(genus as i64 + r as i64 - 1);
    Rat::from_integer(residual)
}

/// Predicted pushforward of the weighted Chern-Mather class after blowing
/// up a nonsingular center `Z` of codimension `d >= 2`:
/// `(-1)^(dim X - dim Y) c_wMa(Y) - (d - 1) c_wMa(Z)`.
pub fn blowup_prediction(
    cwma_y: &ChowClass,
    cwma_z: &ChowClass,
    dim_x: usize,
    dim_y: usize,
    codim: u32,
) -> Result<ChowClass> {
    if codim < 2 || dim_y > dim_x {
        return Err(Error::InvalidParameter {
            detail: "blow-up prediction needs codim >= 2 and dim Y <= dim X".to_string(),
        });
    }
    let first = signed(cwma_y.clone(), dim_x - dim_y);
    let second = cwma_z.scale(&Rat::from_integer(BigInt::from(codim as i64 - 1)));
    first.sub(&second)
}

/// Run the whole pipeline on a homogeneous polynomial.
pub fn full_report(f: &RatPoly, config: &SegreConfig) -> Result<HypersurfaceReport> {
    if f.nvars() < 2 {
        return Err(Error::InvalidParameter {
            detail: "need at least two variables (ambient P^1)".to_string(),
        });
    }
    let n = f.nvars() - 1;
    let d = f.homogeneous_degree()?;
    let jacobian = singularity_scheme(f)?;

    let saturated = saturate_irrelevant(&jacobian, &config.groebner)?;
    let pdim = projective_dimension(&saturated, &config.groebner)?;
    let dim_y = if pdim < 0 { None } else { Some(pdim as usize) };

    let (segre, projective_degrees) = segre_of_ideal_with_degrees(&jacobian, config)?;
    let fulton = fulton_class(n, d);

    let (cwma, mu, csm, milnor) = match dim_y {
        None => (
            ChowClass::zero(n),
            ChowClass::zero(n),
            fulton.clone(),
            ChowClass::zero(n),
        ),
        Some(dy) => {
            let cwma = weighted_mather(&segre, d, dy);
            let mu = mu_class(&cwma, d, dy);
            let (csm, milnor) = csm_and_milnor(&fulton, &cwma, d, dy);
            (cwma, mu, csm, milnor)
        }
    };
    let chi = csm.degree_component();
    debug_assert!(chi.is_integer());

    Ok(HypersurfaceReport {
        n,
        d,
        jacobian,
        dim_y,
        projective_degrees,
        segre,
        cwma,
        mu,
        fulton,
        csm,
        milnor,
        chi,
    })
}
