//! Segre class of a subscheme of `P^n`, pushed forward to the ambient
//! space, computed from the projective degrees of the rational map defined
//! by the ideal generators.
//!
//! Each projective degree `g_i` is the degree of the zero-dimensional
//! residual intersection of `i` generic combinations of the generators with
//! `n - i` generic hyperplanes, after saturating away the base locus by one
//! more generic combination. The draws are Monte Carlo: a tuple is accepted
//! only when two independent draws agree, and every draw is deterministic
//! for a fixed seed.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;

use crate::chow::ChowClass;
use crate::error::{Error, Result};
use crate::groebner::{degree_zero_dim, saturate, GroebnerConfig};
use crate::poly::{monomials_of_degree, random_combination, Ideal, Monomial, RatPoly};
use crate::rng;
use crate::Rat;

/// Seeds, coefficient bounds and retry limits for the Monte Carlo draws.
#[derive(Debug, Clone)]
pub struct SegreConfig {
    pub seed: u64,
    /// Random coefficients are drawn uniformly from `[-bound, bound]`.
    pub bound: u64,
    /// Maximum number of projective-degree draws before giving up.
    pub trials: u32,
    pub groebner: GroebnerConfig,
}

impl Default for SegreConfig {
    fn default() -> Self {
        SegreConfig {
            seed: 0,
            bound: 1009,
            trials: 5,
            groebner: GroebnerConfig::default(),
        }
    }
}

/// The sequence `(g_0, ..., g_n)` of projective degrees of the rational map
/// attached to an ideal with generators of common degree `d'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveDegrees {
    generator_degree: u32,
    degrees: Vec<u64>,
}

impl ProjectiveDegrees {
    pub fn new(generator_degree: u32, degrees: Vec<u64>) -> Result<Self> {
        let pd = ProjectiveDegrees {
            generator_degree,
            degrees,
        };
        if !pd.invariants_hold() {
            return Err(Error::MonteCarloDisagreement {
                first: pd.degrees.clone(),
                second: Vec::new(),
            });
        }
        Ok(pd)
    }

    fn invariants_hold(&self) -> bool {
        if self.degrees.first() != Some(&1) {
            return false;
        }
        self.degrees.iter().enumerate().all(|(i, &g)| {
            (g as u128) <= (self.generator_degree as u128).saturating_pow(i as u32)
        })
    }

    pub fn generator_degree(&self) -> u32 {
        self.generator_degree
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn ambient_dim(&self) -> usize {
        self.degrees.len() - 1
    }
}

/// One draw of the whole degree tuple; entries that fail to be
/// zero-dimensional after saturation are reported as `None`.
fn single_draw(
    ideal: &Ideal,
    config: &SegreConfig,
    draw: u64,
) -> Result<Option<Vec<u64>>> {
    let nvars = ideal.nvars();
    let n = nvars - 1;
    let mut degrees = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut stream = rng::substream(config.seed, draw, i as u64);
        let saturant = nonzero_combination(ideal.generators(), config.bound, &mut stream)?;
        let mut gens: Vec<RatPoly> = Vec::new();
        for _ in 0..i {
            gens.push(nonzero_combination(ideal.generators(), config.bound, &mut stream)?);
        }
        for _ in 0..(n - i) {
            gens.push(nonzero_linear_form(nvars, config.bound, &mut stream));
        }
        let cut = if gens.is_empty() {
            // i = n = 0 cannot happen (nvars >= 2), but keep the shape total
            Ideal::new(nvars, vec![saturant.clone()])?
        } else {
            Ideal::new(nvars, gens)?
        };
        let residual = saturate(&cut, &saturant, &config.groebner)?;
        match degree_zero_dim(&residual, &config.groebner, &mut stream) {
            Ok(d) => degrees.push(d),
            Err(Error::NotZeroDimensional { .. }) | Err(Error::UnluckyCoordinates { .. }) => {
                return Ok(None);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Some(degrees))
}

fn nonzero_combination(
    gens: &[RatPoly],
    bound: u64,
    rng: &mut ChaCha8Rng,
) -> Result<RatPoly> {
    loop {
        let c = random_combination(gens, bound, rng)?;
        if !c.is_zero() {
            return Ok(c);
        }
    }
}

fn nonzero_linear_form(nvars: usize, bound: u64, rng: &mut ChaCha8Rng) -> RatPoly {
    loop {
        let p = RatPoly::from_terms(
            nvars,
            (0..nvars).map(|i| {
                (
                    Monomial::var(nvars, i),
                    Rat::from_integer(rng::int_in(rng, bound).into()),
                )
            }),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// Projective degrees of the map defined by generators of common degree
/// `d'`. Accepts a tuple only when two consecutive independent draws agree
/// and the basic invariants (`g_0 = 1`, `g_i <= d'^i`) hold.
pub fn projective_degrees(
    ideal: &Ideal,
    generator_degree: u32,
    config: &SegreConfig,
) -> Result<ProjectiveDegrees> {
    for g in ideal.generators() {
        if g.homogeneous_degree()? != generator_degree {
            return Err(Error::MixedDegrees);
        }
    }
    if config.bound == 0 {
        return Err(Error::InvalidBound);
    }

    let trials = config.trials.max(2) as u64;
    let mut last_two: Vec<Vec<u64>> = Vec::new();
    let mut previous: Option<ProjectiveDegrees> = None;
    for draw in 0..trials {
        let Some(tuple) = single_draw(ideal, config, draw)? else {
            previous = None;
            continue;
        };
        if last_two.len() == 2 {
            last_two.remove(0);
        }
        last_two.push(tuple.clone());
        let candidate = ProjectiveDegrees {
            generator_degree,
            degrees: tuple,
        };
        if !candidate.invariants_hold() {
            previous = None;
            continue;
        }
        if let Some(prev) = &previous {
            if prev.degrees == candidate.degrees {
                return Ok(candidate);
            }
        }
        previous = Some(candidate);
    }
    Err(Error::MonteCarloDisagreement {
        first: last_two.first().cloned().unwrap_or_default(),
        second: last_two.get(1).cloned().unwrap_or_default(),
    })
}

/// Assemble the pushforward of the Segre class from the projective degrees:
/// the coefficient of `h^k` for `k >= 1` is
/// `(-1)^(k-1) * sum_j C(k, j) d'^(k-j) (-1)^j g_j`.
pub fn segre_class(pd: &ProjectiveDegrees) -> ChowClass {
    let n = pd.ambient_dim();
    let d = BigInt::from(pd.generator_degree);
    let mut coeffs = vec![Rat::zero(); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let mut acc = BigInt::zero();
        for (j, &g) in pd.degrees.iter().enumerate().take(k + 1) {
            let mut term = binomial(BigInt::from(k), BigInt::from(j))
                * num_traits::pow(d.clone(), k - j)
                * BigInt::from(g);
            if j % 2 == 1 {
                term = -term;
            }
            acc += term;
        }
        if k % 2 == 0 {
            acc = -acc;
        }
        *slot = Rat::from_integer(acc);
    }
    ChowClass::from_coeffs(n, coeffs).expect("length n+1")
}

/// Pushforward to `A_*(P^n)` of the Segre class of the subscheme cut out by
/// a homogeneous ideal, together with the accepted projective degrees.
///
/// Generators of lower degree are padded up to the maximal generator degree
/// by multiplying with every monomial of the gap degree, which does not
/// change the subscheme.
pub fn segre_of_ideal_with_degrees(
    ideal: &Ideal,
    config: &SegreConfig,
) -> Result<(ChowClass, ProjectiveDegrees)> {
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let nvars = ideal.nvars();
    let dprime = ideal
        .generators()
        .iter()
        .map(|g| g.total_degree().unwrap())
        .max()
        .unwrap();
    let mut equalized: Vec<RatPoly> = Vec::new();
    for g in ideal.generators() {
        let gap = dprime - g.total_degree().unwrap();
        if gap == 0 {
            equalized.push(g.clone());
        } else {
            for m in monomials_of_degree(nvars, gap) {
                equalized.push(g.mul_term(&m, &Rat::one()));
            }
        }
    }
    let padded = Ideal::new(nvars, equalized)?;
    let pd = projective_degrees(&padded, dprime, config)?;
    Ok((segre_class(&pd), pd))
}

/// As `segre_of_ideal_with_degrees`, returning only the class.
pub fn segre_of_ideal(ideal: &Ideal, config: &SegreConfig) -> Result<ChowClass> {
    segre_of_ideal_with_degrees(ideal, config).map(|(s, _)| s)
}
