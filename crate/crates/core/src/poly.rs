//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are sparse maps from exponent tuples to nonzero
//! arbitrary-precision rational coefficients. The canonical term order is
//! degrevlex on exponents, which makes printing and hashing deterministic.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rng;
use crate::Rat;

/// Exponent tuple for a fixed ambient ring. `Ord` is degrevlex with
/// `x0 > x1 > ... > xn`: higher total degree wins, ties broken by the last
/// nonzero entry of the exponent difference being negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient, `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degrevlex comparison; also the `Ord` implementation.
    pub fn degrevlex(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ne => return ne,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                // smaller exponent in the *last* differing variable wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degrevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree, in descending degrevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(degree);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(nvars, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored coefficient is zero, and every exponent tuple has
/// length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl RatPoly {
    pub fn zero(nvars: usize) -> Self {
        RatPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: Rat) -> Self {
        let mut p = RatPoly::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(nvars), value);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        RatPoly::constant(nvars, Rat::one())
    }

    pub fn variable(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::IndexOutOfRange { index, nvars });
        }
        let mut p = RatPoly::zero(nvars);
        p.terms.insert(Monomial::var(nvars, index), Rat::one());
        Ok(p)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = RatPoly::zero(nvars);
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degrevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Leading term in degrevlex order, `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_ring(&self, other: &RatPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RatPoly) -> Result<RatPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RatPoly) -> Result<RatPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> RatPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> RatPoly {
        if factor.is_zero() {
            return RatPoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor;
        }
        out
    }

    /// Multiply by `coeff * monomial`.
    pub fn mul_term(&self, m: &Monomial, coeff: &Rat) -> RatPoly {
        if coeff.is_zero() {
            return RatPoly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, c)| (mm.mul(m), c * coeff))
            .collect::<BTreeMap<_, _>>();
        RatPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &RatPoly) -> Result<RatPoly> {
        self.check_ring(other)?;
        let mut out = RatPoly::zero(self.nvars);
        // iterate over the smaller operand
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &small.terms {
            for (mm, cc) in &large.terms {
                out.add_term(m.mul(mm), c * cc);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> RatPoly {
        let mut out = RatPoly::one(self.nvars);
        for _ in 0..exp {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Result<RatPoly> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = RatPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Rat::from_integer(BigInt::from(e)));
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        Ok(self.total_degree().unwrap())
    }

    /// Characteristic-zero Euler relation: `sum_i x_i dF/dx_i = deg(F) * F`.
    pub fn euler_check(&self) -> Result<bool> {
        let d = self.homogeneous_degree()?;
        let mut sum = RatPoly::zero(self.nvars);
        for i in 0..self.nvars {
            let xi = RatPoly::variable(self.nvars, i)?;
            sum = sum.add(&xi.mul(&self.partial(i)?)?)?;
        }
        let rhs = self.scale(&Rat::from_integer(BigInt::from(d)));
        Ok(sum == rhs)
    }

    /// Substitute `x_i -> sum_j matrix[i][j] x_j` (a linear change of coordinates).
    pub fn substitute_linear(&self, matrix: &[Vec<Rat>]) -> RatPoly {
        debug_assert_eq!(matrix.len(), self.nvars);
        let images: Vec<RatPoly> = matrix
            .iter()
            .map(|row| {
                debug_assert_eq!(row.len(), self.nvars);
                RatPoly::from_terms(
                    self.nvars,
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| (Monomial::var(self.nvars, j), c.clone())),
                )
            })
            .collect();
        let mut out = RatPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut term = RatPoly::constant(self.nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e)).expect("same ring");
                }
            }
            out = out.add(&term).expect("same ring");
        }
        out
    }

    /// Set variable `index` to 1 and drop it; the result has one variable less.
    pub fn dehomogenize(&self, index: usize) -> RatPoly {
        debug_assert!(index < self.nvars);
        let mut out = RatPoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps.remove(index);
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Insert a fresh variable with exponent 0 at position `index`.
    pub fn extend_ring(&self, index: usize) -> RatPoly {
        debug_assert!(index <= self.nvars);
        let mut out = RatPoly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps.insert(index, 0);
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> RatPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        alloc::format!("x{i}")
                    } else {
                        alloc::format!("x{i}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Random integer combination `sum_i c_i gens[i]` with `|c_i| <= bound`,
/// deterministic for a fixed generator state. Generators must be nonzero of
/// equal total degree.
pub fn random_combination(
    gens: &[RatPoly],
    bound: u64,
    rng: &mut ChaCha8Rng,
) -> Result<RatPoly> {
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let deg = gens[0].total_degree().ok_or(Error::ZeroPolynomial)?;
    for g in gens {
        if g.total_degree().ok_or(Error::ZeroPolynomial)? != deg {
            return Err(Error::MixedDegrees);
        }
    }
    let nvars = gens[0].nvars();
    let mut out = RatPoly::zero(nvars);
    for g in gens {
        let c = Rat::from_integer(BigInt::from(rng::int_in(rng, bound)));
        out = out.add(&g.scale(&c))?;
    }
    Ok(out)
}

/// Finitely generated ideal: an ordered list of nonzero generators in a
/// common ring. Generator order is preserved for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<RatPoly>,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<RatPoly>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(Ideal { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[RatPoly] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(RatPoly::is_homogeneous)
    }
}
