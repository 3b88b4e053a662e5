//! Whole-pipeline invariants on the standard corpus of plane curves and
//! surfaces.

use cherncalc_core::chow::ctpn_twisted;
use cherncalc_core::groebner::{degree_zero_dim, GroebnerConfig};
use cherncalc_core::hypersurface::{
    full_report, mu_class, normal_crossings_cwma, singularity_scheme, weighted_mather,
};
use cherncalc_core::parse::parse_poly;
use cherncalc_core::segre::SegreConfig;
use cherncalc_core::{rng, Rat};

fn ri(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

const PLANE_CURVES: [&str; 6] = [
    "x^2 + y^2 + z^2",
    "x^3 + y^3 + z^3",
    "y^2*z - x^2*z - x^3",
    "y^2*z - x^3",
    "x*y*z",
    "x^2*y + x*y^2",
];

#[test]
fn chi_equals_smooth_value_plus_total_milnor_number() {
    // for reduced plane curves with isolated singularities,
    // chi = (3d - d^2) + sum of local Milnor numbers; the total Milnor
    // number is the length of the Jacobian scheme, an independent count
    let gcfg = GroebnerConfig::default();
    for src in PLANE_CURVES {
        let f = parse_poly(src, 3).unwrap();
        let report = full_report(&f, &SegreConfig::default()).unwrap();
        let d = report.d as i64;
        let jacobian = singularity_scheme(&f).unwrap();
        let mut stream = rng::substream(808, d as u64, 0);
        let total_milnor = degree_zero_dim(&jacobian, &gcfg, &mut stream).unwrap();
        assert_eq!(
            report.chi,
            ri(3 * d - d * d + total_milnor as i64),
            "chi oracle for {src}"
        );
    }
}

#[test]
fn report_internal_invariants() {
    for src in PLANE_CURVES {
        let f = parse_poly(src, 3).unwrap();
        let r = full_report(&f, &SegreConfig::default()).unwrap();
        assert_eq!(r.milnor, r.csm.sub(&r.fulton).unwrap(), "{src}");
        assert!(r.chi.is_integer(), "{src}");
        if r.segre.is_zero() {
            assert!(r.cwma.is_zero() && r.mu.is_zero() && r.milnor.is_zero());
            assert_eq!(r.csm, r.fulton);
        }
        // mu recovers the twisted transform of the Segre class exactly
        let expected_mu = ctpn_twisted(r.n, r.d as i64).mul(&r.segre).unwrap();
        assert_eq!(r.mu, expected_mu, "{src}");
    }
}

#[test]
fn mather_mu_roundtrip_on_corpus() {
    for src in PLANE_CURVES {
        let f = parse_poly(src, 3).unwrap();
        let r = full_report(&f, &SegreConfig::default()).unwrap();
        let dy = r.dim_y.unwrap_or(0);
        let again = mu_class(&weighted_mather(&r.segre, r.d, dy), r.d, dy);
        assert_eq!(again, ctpn_twisted(2, r.d as i64).mul(&r.segre).unwrap(), "{src}");
    }
}

#[test]
fn normal_crossings_matches_pipeline_in_p3() {
    // four coordinate planes in P^3
    let f = parse_poly("x*y*z*w", 4).unwrap();
    let r = full_report(&f, &SegreConfig::default()).unwrap();
    let closed = normal_crossings_cwma(3, &[(1, 1), (1, 1), (1, 1), (1, 1)]).unwrap();
    assert_eq!(r.cwma, closed);
    assert_eq!(r.chi, ri(4));
    // and three coordinate planes
    let f = parse_poly("x*y*z", 4).unwrap();
    let r = full_report(&f, &SegreConfig::default()).unwrap();
    let closed = normal_crossings_cwma(3, &[(1, 1), (1, 1), (1, 1)]).unwrap();
    assert_eq!(r.cwma, closed);
}
