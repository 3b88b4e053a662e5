//! Buchberger-based Grobner engine: normal forms, ideal saturation,
//! dimension of the zero locus, and degrees of zero-dimensional projective
//! schemes.
//!
//! The engine uses the normal selection strategy with Buchberger's coprime
//! and chain criteria; Gebauer-Moller pair pruning is available behind a
//! flag. Every reduction step counts against an explicit budget so runaway
//! computations fail loudly instead of hanging.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{Ideal, Monomial, RatPoly};
use crate::rng;
use crate::Rat;

/// Total degree then reverse-lexicographic tie break on a slice of exponents.
fn degrevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ne => return ne,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Monomial order used by the engine. The block order `EliminateLast`
/// compares the last variable first and is what `saturate` uses to
/// eliminate its auxiliary variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    EliminateLast,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::DegRevLex => degrevlex_slice(ea, eb),
            MonomialOrder::EliminateLast => {
                let last = ea.len() - 1;
                match ea[last].cmp(&eb[last]) {
                    Ordering::Equal => degrevlex_slice(&ea[..last], &eb[..last]),
                    ne => ne,
                }
            }
        }
    }
}

/// Resource limits and strategy switches.
#[derive(Debug, Clone)]
pub struct GroebnerConfig {
    /// Maximum number of single reduction steps before aborting.
    pub budget: u64,
    /// Enable Gebauer-Moller pair pruning.
    pub gebauer_moller: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            budget: 1_000_000,
            gebauer_moller: false,
        }
    }
}

/// A reduced Grobner basis: monic, auto-reduced, elements sorted by
/// increasing leading term. For a fixed generator order the result is the
/// unique reduced basis of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elems: Vec<RatPoly>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[RatPoly] {
        &self.elems
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the basis contains a nonzero constant, i.e. the ideal is `(1)`.
    pub fn is_unit_ideal(&self) -> bool {
        self.elems
            .iter()
            .any(|p| p.leading_term().is_some_and(|(m, _)| m.is_one()))
    }

    fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems
            .iter()
            .map(|p| self.lt_of(p).0.clone())
            .collect()
    }

    fn lt_of<'a>(&self, p: &'a RatPoly) -> (&'a Monomial, &'a Rat) {
        leading_term(p, self.order)
    }
}

fn leading_term(p: &RatPoly, order: MonomialOrder) -> (&Monomial, &Rat) {
    p.terms()
        .max_by(|a, b| order.cmp(a.0, b.0))
        .expect("nonzero polynomial")
}

/// Internal representation: terms sorted strictly descending in the order.
#[derive(Debug, Clone)]
struct OPoly {
    terms: Vec<(Monomial, Rat)>,
}

impl OPoly {
    fn from_poly(p: &RatPoly, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rat)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        OPoly { terms }
    }

    fn into_poly(self, nvars: usize) -> RatPoly {
        RatPoly::from_terms(nvars, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lt(&self) -> &(Monomial, Rat) {
        &self.terms[0]
    }

    fn monic_in_place(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            let inv = Rat::one() / lc.clone();
            if !inv.is_one() {
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self - factor * x^shift * other`, merging two sorted term lists.
    fn sub_scaled(&self, factor: &Rat, shift: &Monomial, other: &OPoly, order: MonomialOrder) -> OPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let shifted = other.terms[j].0.mul(shift);
            match order.cmp(&self.terms[i].0, &shifted) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((shifted, -(factor * &other.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 - factor * &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((shifted, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, c) in &other.terms[j..] {
            out.push((m.mul(shift), -(factor * c)));
        }
        OPoly { terms: out }
    }
}

struct Engine {
    order: MonomialOrder,
    budget: u64,
    steps: u64,
}

impl Engine {
    fn charge(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Full normal form of `p` against monic reducers (tail terms included).
    fn reduce(&mut self, p: OPoly, reducers: &[OPoly]) -> Result<OPoly> {
        let mut remainder: Vec<(Monomial, Rat)> = Vec::new();
        let mut work = p;
        let mut head = 0;
        'outer: while head < work.terms.len() {
            let (m, c) = &work.terms[head];
            for g in reducers {
                if g.is_zero() {
                    continue;
                }
                if let Some(shift) = m.checked_div(&g.lt().0) {
                    self.charge()?;
                    let tail = OPoly {
                        terms: work.terms[head..].to_vec(),
                    };
                    work = tail.sub_scaled(c, &shift, g, self.order);
                    head = 0;
                    continue 'outer;
                }
            }
            remainder.push(work.terms[head].clone());
            head += 1;
        }
        Ok(OPoly { terms: remainder })
    }

    fn s_poly(&self, f: &OPoly, g: &OPoly) -> OPoly {
        let lcm = f.lt().0.lcm(&g.lt().0);
        let sf = lcm.checked_div(&f.lt().0).unwrap();
        let sg = lcm.checked_div(&g.lt().0).unwrap();
        // both inputs are monic
        let shifted_f = OPoly {
            terms: f.terms.iter().map(|(m, c)| (m.mul(&sf), c.clone())).collect(),
        };
        shifted_f.sub_scaled(&Rat::one(), &sg, g, self.order)
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Grobner basis of an ideal; deterministic for a fixed generator order.
pub fn buchberger(
    ideal: &Ideal,
    order: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    let nvars = ideal.nvars();
    let mut engine = Engine {
        order,
        budget: config.budget,
        steps: 0,
    };

    let mut basis: Vec<OPoly> = Vec::new();
    for g in ideal.generators() {
        let mut p = OPoly::from_poly(g, order);
        p = engine.reduce(p, &basis)?;
        if !p.is_zero() {
            p.monic_in_place();
            basis.push(p);
        }
    }

    let mut pending: Vec<Pair> = Vec::new();
    for j in 1..basis.len() {
        add_pairs(&mut pending, &basis, j, order, config.gebauer_moller);
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm in the order, ties by indices
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp(&a.lcm, &b.lcm)
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, _)| k)
            .unwrap();
        let pair = pending.swap_remove(best);
        let (f, g) = (&basis[pair.i], &basis[pair.j]);

        // coprime criterion
        if f.lt().0.coprime(&g.lt().0) {
            continue;
        }
        // chain criterion: some lt(k) divides the lcm and both side pairs
        // are no longer pending
        if !config.gebauer_moller {
            let chained = (0..basis.len()).any(|k| {
                k != pair.i
                    && k != pair.j
                    && pair.lcm.checked_div(&basis[k].lt().0).is_some()
                    && !pending.iter().any(|p| is_pair(p, pair.i, k))
                    && !pending.iter().any(|p| is_pair(p, pair.j, k))
            });
            if chained {
                continue;
            }
        }

        let s = engine.s_poly(f, g);
        let mut r = engine.reduce(s, &basis)?;
        if r.is_zero() {
            continue;
        }
        r.monic_in_place();
        basis.push(r);
        add_pairs(&mut pending, &basis, basis.len() - 1, order, config.gebauer_moller);
    }

    // minimalize: drop elements whose leading term another one divides
    basis.sort_by(|a, b| order.cmp(&a.lt().0, &b.lt().0));
    let mut minimal: Vec<OPoly> = Vec::new();
    for p in basis {
        if !minimal
            .iter()
            .any(|q| p.lt().0.checked_div(&q.lt().0).is_some())
        {
            minimal.push(p);
        }
    }

    // auto-reduce tails; leading terms are stable, one pass suffices
    let mut reduced: Vec<OPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<OPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let mut r = engine.reduce(minimal[i].clone(), &others)?;
        r.monic_in_place();
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(&a.lt().0, &b.lt().0));

    Ok(GroebnerBasis {
        nvars,
        order,
        elems: reduced.into_iter().map(|p| p.into_poly(nvars)).collect(),
        reduced: true,
    })
}

fn is_pair(p: &Pair, a: usize, b: usize) -> bool {
    (p.i == a && p.j == b) || (p.i == b && p.j == a)
}

fn add_pairs(
    pending: &mut Vec<Pair>,
    basis: &[OPoly],
    new: usize,
    order: MonomialOrder,
    gebauer_moller: bool,
) {
    let lt_new = basis[new].lt().0.clone();
    let mut fresh: Vec<Pair> = (0..new)
        .map(|i| Pair {
            i,
            j: new,
            lcm: basis[i].lt().0.lcm(&lt_new),
        })
        .collect();

    if gebauer_moller {
        // B criterion: old pair (i, j) dies when lt(new) divides its lcm
        // strictly away from both side lcms
        pending.retain(|p| {
            !(p.lcm.checked_div(&lt_new).is_some()
                && basis[p.i].lt().0.lcm(&lt_new) != p.lcm
                && basis[p.j].lt().0.lcm(&lt_new) != p.lcm)
        });
        // M criterion: drop (i, new) when some other lcm(j, new) strictly divides it
        let lcms: Vec<Monomial> = fresh.iter().map(|p| p.lcm.clone()).collect();
        fresh.retain(|p| {
                !lcms.iter().enumerate().any(|(j, other)| {
                    j != p.i && p.lcm.checked_div(other).is_some() && *other != p.lcm
                })
            });
        // F criterion: keep a single pair per surviving lcm value
        let mut seen: Vec<Monomial> = Vec::new();
        fresh.retain(|p| {
            if seen.contains(&p.lcm) {
                false
            } else {
                seen.push(p.lcm.clone());
                true
            }
        });
        // coprime pairs reduce to zero; drop them now
        fresh.retain(|p| !basis[p.i].lt().0.coprime(&lt_new));
    }

    let _ = order;
    pending.extend(fresh);
}

/// Remainder of multivariate division by a Grobner basis; zero iff the
/// polynomial lies in the ideal.
pub fn normal_form(p: &RatPoly, basis: &GroebnerBasis) -> RatPoly {
    let mut engine = Engine {
        order: basis.order,
        budget: u64::MAX,
        steps: 0,
    };
    let reducers: Vec<OPoly> = basis
        .elems
        .iter()
        .map(|g| OPoly::from_poly(g, basis.order))
        .collect();
    let r = engine
        .reduce(OPoly::from_poly(p, basis.order), &reducers)
        .expect("unlimited budget");
    r.into_poly(basis.nvars)
}

/// Ideal membership via normal form.
pub fn contains(basis: &GroebnerBasis, p: &RatPoly) -> bool {
    normal_form(p, basis).is_zero()
}

/// Saturation `(J : g^infinity)` via one auxiliary variable `t`: eliminate
/// `t` from `J + (1 - t g)` with a block order that puts `t` first.
pub fn saturate(ideal: &Ideal, g: &RatPoly, config: &GroebnerConfig) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let nvars = ideal.nvars();
    let mut lifted: Vec<RatPoly> = ideal
        .generators()
        .iter()
        .map(|p| p.extend_ring(nvars))
        .collect();
    let t = RatPoly::variable(nvars + 1, nvars).unwrap();
    let relation = RatPoly::one(nvars + 1).sub(&t.mul(&g.extend_ring(nvars))?)?;
    lifted.push(relation);
    let gb = buchberger(
        &Ideal::new(nvars + 1, lifted)?,
        MonomialOrder::EliminateLast,
        config,
    )?;
    let eliminated: Vec<RatPoly> = gb
        .elements()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponents()[nvars] == 0))
        .map(|p| p.dehomogenize(nvars))
        .collect();
    Ideal::new(nvars, eliminated)
}

/// Intersection of two ideals, via `t A + (1 - t) B` and elimination of `t`.
pub fn intersect(a: &Ideal, b: &Ideal, config: &GroebnerConfig) -> Result<Ideal> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    let nvars = a.nvars();
    let t = RatPoly::variable(nvars + 1, nvars).unwrap();
    let one_minus_t = RatPoly::one(nvars + 1).sub(&t)?;
    let mut gens: Vec<RatPoly> = Vec::new();
    for p in a.generators() {
        gens.push(t.mul(&p.extend_ring(nvars))?);
    }
    for p in b.generators() {
        gens.push(one_minus_t.mul(&p.extend_ring(nvars))?);
    }
    let gb = buchberger(
        &Ideal::new(nvars + 1, gens)?,
        MonomialOrder::EliminateLast,
        config,
    )?;
    let eliminated: Vec<RatPoly> = gb
        .elements()
        .iter()
        .filter(|p| p.terms().all(|(m, _)| m.exponents()[nvars] == 0))
        .map(|p| p.dehomogenize(nvars))
        .collect();
    Ideal::new(nvars, eliminated)
}

/// Saturation with respect to the irrelevant maximal ideal:
/// `(J : m^inf) = intersection over i of (J : x_i^inf)`.
pub fn saturate_irrelevant(ideal: &Ideal, config: &GroebnerConfig) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for i in 0..ideal.nvars() {
        let xi = RatPoly::variable(ideal.nvars(), i).unwrap();
        let sat = saturate(ideal, &xi, config)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) => intersect(&prev, &sat, config)?,
        });
    }
    Ok(acc.expect("at least one variable"))
}

/// Krull dimension of `R / LT(I)`: the largest set of variables such that no
/// leading monomial is supported entirely inside it.
fn krull_dim_of_leading_terms(lts: &[Monomial], nvars: usize) -> usize {
    debug_assert!(nvars <= 32);
    let supports: Vec<u32> = lts
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << nvars) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !subset != 0 || *s == 0) {
            // a constant leading term means the unit ideal; no subset works
            if supports.contains(&0) {
                continue;
            }
            best = size;
        }
    }
    best
}

/// Dimension of the projective zero locus of a homogeneous ideal:
/// `-1` for the empty scheme, otherwise `dim V(I)`.
pub fn projective_dimension(ideal: &Ideal, config: &GroebnerConfig) -> Result<i64> {
    let gb = buchberger(ideal, MonomialOrder::DegRevLex, config)?;
    if gb.is_unit_ideal() {
        return Ok(-1);
    }
    let lts = gb.leading_monomials();
    let affine_cone = krull_dim_of_leading_terms(&lts, ideal.nvars());
    Ok(affine_cone as i64 - 1)
}

fn is_zero_dimensional_affine(gb: &GroebnerBasis) -> bool {
    pure_power_bounds(gb).is_some()
}

/// For each variable, the least pure power appearing as a leading monomial.
fn pure_power_bounds(gb: &GroebnerBasis) -> Option<Vec<u32>> {
    let nvars = gb.nvars();
    let mut bounds = vec![u32::MAX; nvars];
    for m in gb.leading_monomials() {
        let exps = m.exponents();
        let mut support = exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((i, &e)), None) => bounds[i] = bounds[i].min(e),
            (None, None) => return Some(vec![0; nvars]), // unit ideal
            _ => {}
        }
    }
    if bounds.iter().all(|&b| b != u32::MAX) {
        Some(bounds)
    } else {
        None
    }
}

/// Number of standard monomials (monomials outside the leading term ideal);
/// finite precisely in the zero-dimensional case.
fn count_standard_monomials(gb: &GroebnerBasis) -> u64 {
    let bounds = pure_power_bounds(gb).expect("zero-dimensional basis");
    let lts = gb.leading_monomials();
    let nvars = gb.nvars();
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !lts.iter().any(|lt| m.checked_div(lt).is_some()) {
            count += 1;
        }
        // odometer over the box [0, bounds_i)
        let mut k = 0;
        loop {
            if k == nvars {
                return count;
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

const COORDINATE_RETRIES: u32 = 10;

/// Degree (= length) of a zero-dimensional projective scheme `V(I)`, or 0
/// when `V(I)` is empty.
///
/// Method: check the dimension, apply a random linear change of coordinates
/// that moves the scheme away from the hyperplane `x0 = 0`, dehomogenize at
/// `x0 = 1` and count standard monomials of the affine reduced basis.
pub fn degree_zero_dim(
    ideal: &Ideal,
    config: &GroebnerConfig,
    rng: &mut ChaCha8Rng,
) -> Result<u64> {
    let nvars = ideal.nvars();
    let pdim = projective_dimension(ideal, config)?;
    if pdim < 0 {
        return Ok(0);
    }
    if pdim > 0 {
        return Err(Error::NotZeroDimensional { dimension: pdim });
    }

    for _ in 0..COORDINATE_RETRIES {
        let matrix = random_invertible_matrix(nvars, rng);
        let transformed: Vec<RatPoly> = ideal
            .generators()
            .iter()
            .map(|p| p.substitute_linear(&matrix))
            .collect();

        // nothing may remain on the hyperplane at infinity
        let mut with_hyperplane = transformed.clone();
        with_hyperplane.push(RatPoly::variable(nvars, 0).unwrap());
        if projective_dimension(&Ideal::new(nvars, with_hyperplane)?, config)? >= 0 {
            continue;
        }

        let affine: Vec<RatPoly> = transformed.iter().map(|p| p.dehomogenize(0)).collect();
        let gb = buchberger(&Ideal::new(nvars - 1, affine)?, MonomialOrder::DegRevLex, config)?;
        if !is_zero_dimensional_affine(&gb) {
            continue;
        }
        return Ok(count_standard_monomials(&gb));
    }
    Err(Error::UnluckyCoordinates {
        retries: COORDINATE_RETRIES,
    })
}

fn random_invertible_matrix(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Rat>> {
    loop {
        let matrix: Vec<Vec<Rat>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Rat::from_integer(rng::int_in(rng, 9).into()))
                    .collect()
            })
            .collect();
        if !determinant(&matrix).is_zero() {
            return matrix;
        }
    }
}

fn determinant(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        let pivot_row = m[col].clone();
        for other in m.iter_mut().skip(col + 1) {
            if other[col].is_zero() {
                continue;
            }
            let factor = &other[col] / &pv;
            for (dst, src) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(src: &str, nvars: usize) -> RatPoly {
        parse_poly(src, nvars).unwrap()
    }

    fn ideal(gens: &[&str], nvars: usize) -> Ideal {
        Ideal::new(nvars, gens.iter().map(|g| p(g, nvars)).collect()).unwrap()
    }

    fn gb(gens: &[&str], nvars: usize) -> GroebnerBasis {
        buchberger(&ideal(gens, nvars), MonomialOrder::DegRevLex, &GroebnerConfig::default())
            .unwrap()
    }

    #[test]
    fn principal_ideal() {
        let basis = gb(&["x"], 2);
        assert_eq!(basis.elements(), &[p("x", 2)]);
    }

    #[test]
    fn one_buchberger_step_by_hand() {
        // y (x^2 + y^2) - x (x y) = y^3
        let basis = gb(&["x^2 + y^2", "x*y"], 2);
        assert!(basis.elements().contains(&p("y^3", 2)));
        assert!(contains(&basis, &p("y^3", 2)));
    }

    #[test]
    fn redundant_generator_removed() {
        let basis = gb(&["x", "x^2"], 2);
        assert_eq!(basis.elements(), &[p("x", 2)]);
    }

    #[test]
    fn basis_invariant_under_generator_scaling() {
        let a = gb(&["x^2 + y^2", "x*y"], 2);
        let b = gb(&["7*x^2 + 7*y^2", "-1/3*x*y"], 2);
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn gebauer_moller_agrees_with_classic() {
        let i = ideal(&["x^2 + y*z", "y^2 - x*z", "x*y + z^2"], 3);
        let classic = buchberger(&i, MonomialOrder::DegRevLex, &GroebnerConfig::default()).unwrap();
        let gm = buchberger(
            &i,
            MonomialOrder::DegRevLex,
            &GroebnerConfig {
                gebauer_moller: true,
                ..GroebnerConfig::default()
            },
        )
        .unwrap();
        assert_eq!(classic.elements(), gm.elements());
    }

    #[test]
    fn normal_forms() {
        let basis = gb(&["x"], 2);
        assert!(normal_form(&p("x^2", 2), &basis).is_zero());
        let basis2 = gb(&["y"], 2);
        assert_eq!(normal_form(&p("x + 1", 2), &basis2), p("x + 1", 2));
        // every input generator reduces to zero
        let i = ideal(&["x^2 + y^2", "x*y"], 2);
        let basis3 = buchberger(&i, MonomialOrder::DegRevLex, &GroebnerConfig::default()).unwrap();
        for g in i.generators() {
            assert!(normal_form(g, &basis3).is_zero());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let i = ideal(&["x^2 + y*z", "y^2 - x*z", "x*y + z^2"], 3);
        let tiny = GroebnerConfig {
            budget: 1,
            gebauer_moller: false,
        };
        assert!(matches!(
            buchberger(&i, MonomialOrder::DegRevLex, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn saturation_examples() {
        let cfg = GroebnerConfig::default();
        // (x^2 y : y^inf) = (x^2)
        let s = saturate(&ideal(&["x^2*y"], 2), &p("y", 2), &cfg).unwrap();
        assert_eq!(s.generators(), &[p("x^2", 2)]);
        // ((x^2, x y) : x^inf) = (1): already x^2 * 1 lies in the ideal
        let s = saturate(&ideal(&["x^2", "x*y"], 2), &p("x", 2), &cfg).unwrap();
        assert_eq!(s.generators(), &[p("1", 2)]);
        // ((x^2, x y) : (x, y)^inf) = (x), the honest divisorial part
        let s = saturate_irrelevant(&ideal(&["x^2", "x*y"], 2), &cfg).unwrap();
        assert_eq!(s.generators(), &[p("x", 2)]);
        // saturating by a unit leaves the ideal unchanged
        let j = ideal(&["x^2 + y^2", "x*y"], 2);
        let s = saturate(&j, &p("5", 2), &cfg).unwrap();
        let expected = buchberger(&j, MonomialOrder::DegRevLex, &cfg).unwrap();
        assert_eq!(s.generators(), expected.elements());
        // zero saturant is rejected
        assert!(matches!(
            saturate(&j, &RatPoly::zero(2), &cfg),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn saturation_is_idempotent() {
        let cfg = GroebnerConfig::default();
        let j = ideal(&["x^2*y", "x*y^2"], 3);
        let g = p("y", 3);
        let once = saturate(&j, &g, &cfg).unwrap();
        let twice = saturate(&once, &g, &cfg).unwrap();
        assert_eq!(once.generators(), twice.generators());
    }

    #[test]
    fn irrelevant_saturation() {
        let cfg = GroebnerConfig::default();
        // (x, y, z) is irrelevant in P^2: saturates to (1)
        let s = saturate_irrelevant(&ideal(&["x", "y", "z"], 3), &cfg).unwrap();
        assert_eq!(s.generators(), &[p("1", 3)]);
        // a point survives
        let s = saturate_irrelevant(&ideal(&["x", "y"], 3), &cfg).unwrap();
        let gb = buchberger(&s, MonomialOrder::DegRevLex, &cfg).unwrap();
        assert!(contains(&gb, &p("x", 3)));
        assert!(contains(&gb, &p("y", 3)));
        assert!(!contains(&gb, &p("z", 3)));
    }

    #[test]
    fn projective_dimensions() {
        let cfg = GroebnerConfig::default();
        assert_eq!(projective_dimension(&ideal(&["x", "y"], 3), &cfg).unwrap(), 0);
        assert_eq!(projective_dimension(&ideal(&["x"], 3), &cfg).unwrap(), 1);
        assert_eq!(
            projective_dimension(&ideal(&["x", "y", "z"], 3), &cfg).unwrap(),
            -1
        );
    }

    #[test]
    fn degrees_of_zero_dimensional_schemes() {
        let cfg = GroebnerConfig::default();
        let mut rng = crate::rng::substream(11, 0, 0);
        assert_eq!(degree_zero_dim(&ideal(&["x", "y"], 3), &cfg, &mut rng).unwrap(), 1);
        assert_eq!(degree_zero_dim(&ideal(&["x^2", "y"], 3), &cfg, &mut rng).unwrap(), 2);
        // y(2x + y) and x(x + 2y): two conics meeting only at (0:0:1)
        assert_eq!(
            degree_zero_dim(&ideal(&["2*x*y + y^2", "x^2 + 2*x*y"], 3), &cfg, &mut rng).unwrap(),
            4
        );
        // empty scheme has degree 0
        assert_eq!(
            degree_zero_dim(&ideal(&["x", "y", "z"], 3), &cfg, &mut rng).unwrap(),
            0
        );
        // positive-dimensional input is an error
        assert!(matches!(
            degree_zero_dim(&ideal(&["x"], 3), &cfg, &mut rng),
            Err(Error::NotZeroDimensional { dimension: 1 })
        ));
    }

    #[test]
    fn elimination_order_blocks_on_last_variable() {
        let t2 = Monomial::new(vec![0, 0, 2]);
        let x5 = Monomial::new(vec![5, 0, 0]);
        assert_eq!(MonomialOrder::EliminateLast.cmp(&t2, &x5), Ordering::Greater);
    }
}
