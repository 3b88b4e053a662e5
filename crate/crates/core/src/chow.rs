//! Class calculus on the Chow ring of projective space.
//!
//! A class is a truncated polynomial in the hyperplane class `h`, with
//! `h^k` Poincare-dual to `[P^{n-k}]`; the dimension-`p` piece of a class is
//! its `h^{n-p}` coefficient. Everything is stored as a pushforward to the
//! ambient `P^n`. Besides the ring structure the module implements the
//! dimensionwise dual `a_p -> (-1)^p a_p`, the twist
//! `a_p -> c(L)^p cap a_p` by a line bundle `L`, and their composite, which
//! is an involution.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Line bundle `O(l)` on `P^n`, with first Chern class `l * h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineBundle {
    pub twist: i64,
}

impl LineBundle {
    pub fn new(twist: i64) -> Self {
        LineBundle { twist }
    }

    pub fn dual(&self) -> Self {
        LineBundle { twist: -self.twist }
    }

    pub fn tensor(&self, other: &LineBundle) -> Self {
        LineBundle {
            twist: self.twist + other.twist,
        }
    }
}

/// Dimension-graded rational class in `A_*(P^n)`: coefficients `c_0..c_n`
/// of `h^0..h^n`, with arithmetic truncated at `h^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    n: usize,
    coeffs: Vec<Rat>,
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        ChowClass {
            n,
            coeffs: vec![Rat::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut c = ChowClass::zero(n);
        c.coeffs[0] = Rat::one();
        c
    }

    /// `h^k`, i.e. the class of a linear `[P^{n-k}]`.
    pub fn hyperplane_power(n: usize, k: usize) -> Self {
        let mut c = ChowClass::zero(n);
        if k <= n {
            c.coeffs[k] = Rat::one();
        }
        c
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::CoefficientCount {
                expected: n + 1,
                got: coeffs.len(),
            });
        }
        Ok(ChowClass { n, coeffs })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Coefficient of `h^k` (zero beyond the truncation).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn check_ambient(&self, other: &ChowClass) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_ambient(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ChowClass { n: self.n, coeffs })
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Product truncated at `h^{n+1}`.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_ambient(other)?;
        let mut coeffs = vec![Rat::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j <= self.n && !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(ChowClass { n: self.n, coeffs })
    }

    /// Multiplicative inverse of a unit (nonzero constant term), truncated.
    pub fn inverse_unit(&self) -> Result<ChowClass> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitClass);
        }
        let mut inv = vec![Rat::zero(); self.n + 1];
        inv[0] = Rat::one() / c0.clone();
        for k in 1..=self.n {
            let mut acc = Rat::zero();
            for (a, b) in inv[..k].iter().zip(self.coeffs[1..=k].iter().rev()) {
                acc += a * b;
            }
            inv[k] = -acc / c0.clone();
        }
        Ok(ChowClass {
            n: self.n,
            coeffs: inv,
        })
    }

    /// The dimension-`p` piece sits in `h^{n-p}`.
    pub fn dim_coeff(&self, p: usize) -> Rat {
        self.coeff(self.n - p)
    }

    /// Dimensionwise dual: the dimension-`p` piece is scaled by `(-1)^p`.
    pub fn dual(&self) -> ChowClass {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if (self.n - k) % 2 == 1 {
                    -c.clone()
                } else {
                    c.clone()
                }
            })
            .collect();
        ChowClass { n: self.n, coeffs }
    }

    /// Twist by a line bundle: each dimension-`p` piece `a_p` becomes
    /// `(1 + l h)^p cap a_p`, summed and truncated.
    pub fn twist(&self, bundle: &LineBundle) -> ChowClass {
        let l = BigInt::from(bundle.twist);
        let mut out = ChowClass::zero(self.n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.n - k;
            // (1 + l h)^p * c h^k
            for j in 0..=p.min(self.n - k) {
                let b = binomial(BigInt::from(p), BigInt::from(j));
                let factor = Rat::from_integer(b * num_traits::pow(l.clone(), j));
                out.coeffs[k + j] += c * &factor;
            }
        }
        out
    }

    /// Dual followed by twist; an involution for any fixed bundle.
    pub fn dual_twist(&self, bundle: &LineBundle) -> ChowClass {
        self.dual().twist(bundle)
    }

    /// Coefficient of `h^n`: the degree of the zero-dimensional component.
    pub fn degree_component(&self) -> Rat {
        self.coeffs[self.n].clone()
    }

    /// Render in `[P^k]` notation (the dimension-graded form).
    pub fn to_pk_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut parts = Vec::new();
        for k in 0..=self.n {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            parts.push((c.clone(), self.n - k));
        }
        join_terms(parts.into_iter().map(|(c, p)| (c, alloc::format!("[P{p}]"), false)))
    }
}

/// Chern class of the twisted cotangent bundle `T*P^n (x) O(d)`:
/// `(1 + (d-1) h)^{n+1} / (1 + d h)`, truncated.
pub fn ctpn_twisted(n: usize, d: i64) -> ChowClass {
    let numerator = line_power(n, d - 1, n + 1);
    let denominator = line_power(n, d, 1);
    numerator
        .mul(&denominator.inverse_unit().expect("unit"))
        .expect("same ambient")
}

/// `(1 + l h)^e` truncated in `A_*(P^n)`.
pub fn line_power(n: usize, l: i64, e: usize) -> ChowClass {
    let mut coeffs = vec![Rat::zero(); n + 1];
    let l = BigInt::from(l);
    for (k, slot) in coeffs.iter_mut().enumerate().take(e.min(n) + 1) {
        let b = binomial(BigInt::from(e), BigInt::from(k));
        *slot = Rat::from_integer(b * num_traits::pow(l.clone(), k));
    }
    ChowClass { n, coeffs }
}

fn join_terms(parts: impl Iterator<Item = (Rat, String, bool)>) -> String {
    let mut out = String::new();
    for (i, (c, sym, bare)) in parts.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if bare && sym.is_empty() {
            out.push_str(&alloc::format!("{abs}"));
        } else if abs.is_one() {
            out.push_str(&sym);
        } else {
            out.push_str(&alloc::format!("{abs}{sym}"));
        }
    }
    out
}

impl fmt::Display for ChowClass {
    /// Render in powers of the hyperplane class, e.g. `3h + h^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let sym = match k {
                0 => String::new(),
                1 => String::from("h"),
                _ => alloc::format!("h^{k}"),
            };
            (c.clone(), sym, k == 0)
        });
        write!(f, "{}", join_terms(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(n: usize, coeffs: &[i64]) -> ChowClass {
        ChowClass::from_coeffs(
            n,
            coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cube_of_unit() {
        let a = cls(2, &[1, 1, 0]);
        let cube = a.mul(&a).unwrap().mul(&a).unwrap();
        assert_eq!(cube, cls(2, &[1, 3, 3]));
    }

    #[test]
    fn geometric_series_inverse() {
        let a = cls(2, &[1, 2, 0]);
        assert_eq!(a.inverse_unit().unwrap(), cls(2, &[1, -2, 4]));
        assert_eq!(a.mul(&a.inverse_unit().unwrap()).unwrap(), ChowClass::one(2));
        assert!(matches!(
            cls(2, &[0, 1, 0]).inverse_unit(),
            Err(Error::NonUnitClass)
        ));
    }

    #[test]
    fn dual_flips_odd_dimensions() {
        let a = cls(2, &[0, 3, 5]);
        assert_eq!(a.dual(), cls(2, &[0, -3, 5]));
        assert_eq!(a.dual().dual(), a);
        assert!(ChowClass::zero(2).dual().is_zero());
    }

    #[test]
    fn twist_examples() {
        // a = h in P^2 (p = 1), L = O(2): (1 + 2h) h = h + 2h^2
        let a = cls(2, &[0, 1, 0]);
        assert_eq!(a.twist(&LineBundle::new(2)), cls(2, &[0, 1, 2]));
        // trivial bundle is the identity
        let b = cls(2, &[4, -1, 7]);
        assert_eq!(b.twist(&LineBundle::new(0)), b);
        // dimension-zero pieces are fixed
        let c = cls(2, &[0, 0, 1]);
        assert_eq!(c.twist(&LineBundle::new(5)), c);
    }

    #[test]
    fn dual_twist_hand_expansion() {
        // a = h - h^2 in P^2, L = O(2): dual -> -h - h^2, twist -> -h - 3h^2
        let a = cls(2, &[0, 1, -1]);
        assert_eq!(a.dual_twist(&LineBundle::new(2)), cls(2, &[0, -1, -3]));
        // L = O(0) degenerates to the plain dual
        assert_eq!(a.dual_twist(&LineBundle::new(0)), a.dual());
    }

    #[test]
    fn dual_twist_is_an_involution() {
        let a = cls(3, &[2, -5, 1, 7]);
        let l = LineBundle::new(3);
        assert_eq!(a.dual_twist(&l).dual_twist(&l), a);
    }

    #[test]
    fn twisted_cotangent_examples() {
        assert_eq!(ctpn_twisted(2, 2), cls(2, &[1, 1, 1]));
        assert_eq!(ctpn_twisted(2, 3), cls(2, &[1, 3, 3]));
    }

    #[test]
    fn twisted_cotangent_matches_euler_sequence_for_d1() {
        // c(T*P^n (x) O(1)) from the Euler sequence: the twisted cotangent
        // bundle sits in 0 -> Omega^1(1) -> O^{n+1} -> O(1) -> 0, so its
        // total Chern class is 1/(1 + h).
        for n in 1..=5 {
            let euler = line_power(n, 1, 1).inverse_unit().unwrap();
            assert_eq!(ctpn_twisted(n, 1), euler);
        }
    }

    #[test]
    fn degree_component_reads_hn() {
        assert_eq!(cls(2, &[0, 2, 2]).degree_component(), Rat::from_integer(2.into()));
        assert!(ChowClass::zero(2).degree_component().is_zero());
        assert!(cls(2, &[0, 1, 0]).degree_component().is_zero());
    }

    #[test]
    fn rendering() {
        let a = cls(2, &[0, 3, 1]);
        assert_eq!(alloc::format!("{a}"), "3h + h^2");
        assert_eq!(a.to_pk_string(), "3[P1] + [P0]");
        assert_eq!(alloc::format!("{}", ChowClass::zero(2)), "0");
    }
}
