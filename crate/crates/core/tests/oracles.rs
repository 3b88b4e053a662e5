//! Independent oracles for the Grobner and Segre engines: Bezout counts on
//! random complete intersections, the divisor law for principal ideals, and
//! seed stability of the Monte Carlo draws.

use cherncalc_core::chow::ChowClass;
use cherncalc_core::groebner::{degree_zero_dim, GroebnerConfig};
use cherncalc_core::poly::{monomials_of_degree, Ideal, RatPoly};
use cherncalc_core::rng;
use cherncalc_core::segre::{segre_of_ideal, SegreConfig};
use cherncalc_core::Rat;
use num_traits::{One, Zero};

/// Dense form of the given degree with nonzero random coefficients.
fn random_form(nvars: usize, degree: u32, rng: &mut rand_chacha::ChaCha8Rng) -> RatPoly {
    RatPoly::from_terms(
        nvars,
        monomials_of_degree(nvars, degree).into_iter().map(|m| {
            let mut c = 0;
            while c == 0 {
                c = rng::int_in(rng, 50);
            }
            (m, Rat::from_integer(c.into()))
        }),
    )
}

#[test]
fn bezout_oracle_complete_intersections() {
    let cfg = GroebnerConfig::default();
    // (nvars, degrees): generic complete intersections in P^2 and P^3
    let cases: [(usize, &[u32]); 6] = [
        (3, &[1, 2]),
        (3, &[2, 2]),
        (3, &[2, 3]),
        (4, &[1, 2, 2]),
        (4, &[2, 2, 2]),
        (4, &[1, 2, 3]),
    ];
    for (case, (nvars, degrees)) in cases.into_iter().enumerate() {
        let mut rng = rng::substream(2024, case as u64, 0);
        let gens: Vec<RatPoly> = degrees
            .iter()
            .map(|&d| random_form(nvars, d, &mut rng))
            .collect();
        let ideal = Ideal::new(nvars, gens).unwrap();
        let expected: u64 = degrees.iter().map(|&d| d as u64).product();
        let got = degree_zero_dim(&ideal, &cfg, &mut rng).unwrap();
        assert_eq!(got, expected, "case {case}: degrees {degrees:?}");
    }
}

#[test]
fn divisor_law_for_principal_ideals() {
    // s(V(f), P^n) = a h / (1 + a h) for f of degree a
    let cfg = SegreConfig::default();
    for (nvars, degree) in [(3usize, 1u32), (3, 2), (3, 3), (4, 2)] {
        let n = nvars - 1;
        let mut rng = rng::substream(77, degree as u64, nvars as u64);
        let f = random_form(nvars, degree, &mut rng);
        let ideal = Ideal::new(nvars, vec![f]).unwrap();
        let s = segre_of_ideal(&ideal, &cfg).unwrap();
        let ah = ChowClass::hyperplane_power(n, 1).scale(&Rat::from_integer(degree.into()));
        let expected = ah
            .mul(&ah.add(&ChowClass::one(n)).unwrap().inverse_unit().unwrap())
            .unwrap();
        assert_eq!(s, expected, "degree {degree} in P^{n}");
    }
}

#[test]
fn seed_stability_of_segre_classes() {
    // two disjoint seeds agree on a small corpus of plane-curve Jacobians
    let polys = ["y^2*z - x^2*z - x^3", "y^2*z - x^3", "x*y*z", "x^2*y + x*y^2"];
    for src in polys {
        let f = cherncalc_core::parse::parse_poly(src, 3).unwrap();
        let j = cherncalc_core::hypersurface::singularity_scheme(&f).unwrap();
        let a = segre_of_ideal(&j, &SegreConfig { seed: 1, ..SegreConfig::default() }).unwrap();
        let b = segre_of_ideal(&j, &SegreConfig { seed: 2, ..SegreConfig::default() }).unwrap();
        assert_eq!(a, b, "{src}");
    }
}

#[test]
fn smooth_corpus_vanishing() {
    let cfg = SegreConfig::default();
    let smooth = [
        ("x^2 + y^2 + z^2", 3usize),
        ("x^3 + y^3 + z^3", 3),
        ("x^2 + y^2 + z^2 + w^2", 4),
    ];
    for (src, nvars) in smooth {
        let f = cherncalc_core::parse::parse_poly(src, nvars).unwrap();
        let j = cherncalc_core::hypersurface::singularity_scheme(&f).unwrap();
        assert!(segre_of_ideal(&j, &cfg).unwrap().is_zero(), "{src}");
    }
}

#[test]
fn complete_intersection_leading_term() {
    // for a generic codimension-c complete intersection with degree product
    // D, the leading piece of the Segre class is D h^c
    let cfg = SegreConfig::default();
    let cases: [(usize, &[u32]); 2] = [(3, &[1, 1]), (3, &[2, 1])];
    for (case, (nvars, degrees)) in cases.into_iter().enumerate() {
        let mut rng = rng::substream(5150, case as u64, 1);
        let gens: Vec<RatPoly> = degrees
            .iter()
            .map(|&d| random_form(nvars, d, &mut rng))
            .collect();
        let c = degrees.len();
        let product: i64 = degrees.iter().map(|&d| d as i64).product();
        let ideal = Ideal::new(nvars, gens).unwrap();
        let s = segre_of_ideal(&ideal, &cfg).unwrap();
        assert_eq!(s.coeff(c), Rat::from_integer(product.into()), "case {case}");
        for k in 0..c {
            assert!(s.coeff(k).is_zero());
        }
    }
}

#[test]
fn one_is_one() {
    assert!(Rat::one().is_integer());
}
