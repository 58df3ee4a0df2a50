//! Numerical experiments that tie the discretized operator to the analytic
//! bounds. Lengths are in wavelengths.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wavechan_core::bounds2d::{
    bound_spectrum_2d, default_q_max, strength_spectrum_2d, sum_rule_lower_2d, BoundingGeometry2D,
};
use wavechan_core::bounds3d::{
    strength_spectrum_3d, sum_rule_lower_3d, BoundingGeometry3D, Enumeration,
};
use wavechan_core::geometry::Core;
use wavechan_core::oracle::{
    assemble, domain_singular_values, make_geometry, make_polar, piestun_counterexample,
    polar_angular_count, relative_spectrum, scalar_green_2d, singular_values, verify_monotonicity,
    Shape,
};

const K: f64 = 2.0 * PI;

fn fig2b() -> BoundingGeometry2D {
    BoundingGeometry2D::new(K, 0.5, 0.5, 1.0, 0.5, 0.5).unwrap()
}

/// Ranks where the bound is still far above round-off in the numerical
/// strengths.
fn dominated(numeric: &[f64], bound: &[f64]) -> bool {
    numeric
        .iter()
        .zip(bound)
        .filter(|(_, b)| **b >= 1e-20)
        .all(|(n, b)| *n <= b * (1.0 + 1e-9))
}

#[test]
fn piestun_counts() {
    let r = piestun_counterexample(K, 1.0 / 40.0).unwrap();
    assert!((r.n_bound - 10.7).abs() <= 0.2, "{}", r.n_bound);
    assert!((r.n_shell_shell - 16.4).abs() <= 0.5, "{}", r.n_shell_shell);
    // the ratio of each shell-shell channel to its q = 0 channel exceeds
    // the cylinder-shell ratio for most q up to 10
    let above = r.per_q[1..=10]
        .iter()
        .filter(|x| x.numeric > x.bound)
        .count();
    assert!(above >= 8, "{above}");
    let n: Vec<f64> = r.per_rank.iter().map(|x| x.numeric).collect();
    let b: Vec<f64> = r.per_rank.iter().map(|x| x.bound).collect();
    assert!(dominated(&n, &b));
}

#[test]
fn filled_cylinder_shell_converges_to_closed_form() {
    let geom = BoundingGeometry2D::new(K, 1.0, 0.5, 9.0, PI, PI * 21.0)
        .unwrap()
        .with_core(Core::Source);
    let exact = strength_spectrum_2d(&geom, 60).unwrap().expanded();
    let mut last = f64::INFINITY;
    for h in [1.0 / 20.0, 1.0 / 40.0] {
        let m = polar_angular_count(11.0, h);
        let disk = make_polar(
            &Shape::Disk2d {
                center: [0.0; 2],
                radius: 1.0,
            },
            h,
            m,
        )
        .unwrap();
        let shell = make_polar(
            &Shape::Annulus2d {
                center: [0.0; 2],
                inner: 10.0,
                outer: 11.0,
            },
            h,
            m,
        )
        .unwrap();
        let sigma = domain_singular_values(&disk, &shell, K).unwrap();
        let worst = sigma
            .iter()
            .zip(&exact)
            .take(10)
            .map(|(s, e)| (s / e.sqrt() - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(worst < last, "{worst} at spacing {h}");
        last = worst;
    }
    assert!(last < 0.03, "{last}");
}

fn square_pair(
    h: f64,
) -> (
    wavechan_core::oracle::DiscretizedDomain,
    wavechan_core::oracle::DiscretizedDomain,
) {
    let side = 1.0 / 2f64.sqrt();
    let s = make_geometry(
        &Shape::Square2d {
            center: [0.0, 0.0],
            side,
        },
        h,
    )
    .unwrap();
    let r = make_geometry(
        &Shape::Square2d {
            center: [2.0, 0.0],
            side,
        },
        h,
    )
    .unwrap();
    (s, r)
}

#[test]
fn square_square_below_bound() {
    let g = fig2b();
    let (s, r) = square_pair(1.0 / 20.0);
    let spec = relative_spectrum(&assemble(&s, &r, K).unwrap()).unwrap();
    let bound = bound_spectrum_2d(&g, default_q_max(&g)).unwrap().expanded();
    assert!(dominated(&spec.sum.expanded(), &bound));
    assert!((spec.sum.total() - 1.0).abs() < 1e-12);
    assert_eq!(spec.max.entries()[0].strength, 1.0);
}

#[test]
fn shell_shell_below_bound() {
    let g = fig2b();
    let h = 1.0 / 40.0;
    let m = polar_angular_count(1.55215, h);
    let s = make_polar(
        &Shape::Annulus2d {
            center: [0.0; 2],
            inner: 0.30141,
            outer: 0.5,
        },
        h,
        m,
    )
    .unwrap();
    let r = make_polar(
        &Shape::Annulus2d {
            center: [0.0; 2],
            inner: 1.5,
            outer: 1.55215,
        },
        h,
        m,
    )
    .unwrap();
    let sigma = domain_singular_values(&s, &r, K).unwrap();
    let total: f64 = sigma.iter().map(|x| x * x).sum();
    let rel: Vec<f64> = sigma.iter().map(|x| x * x / total).collect();
    let bound = bound_spectrum_2d(&g, default_q_max(&g)).unwrap().expanded();
    assert!(dominated(&rel, &bound));
}

#[test]
fn quarter_annulus_monotonicity() {
    let h = 1.0 / 30.0;
    let src = make_geometry(
        &Shape::Annulus2d {
            center: [0.0; 2],
            inner: 0.3,
            outer: 1.0,
        },
        h,
    )
    .unwrap();
    let quarter = src.sector([0.0; 2], 0.0, PI / 2.0).unwrap();
    let rcv = make_geometry(
        &Shape::Square2d {
            center: [2.5, 0.0],
            side: 0.5,
        },
        h,
    )
    .unwrap();
    let report = verify_monotonicity(&quarter, &src, &rcv, &rcv, K).unwrap();
    assert!(report.passed, "{}", report.worst());
    let same = verify_monotonicity(&src, &src, &rcv, &rcv, K).unwrap();
    assert!(same.differences.iter().all(|d| *d == 0.0));
    assert!(verify_monotonicity(&src, &quarter, &rcv, &rcv, K).is_err());
}

#[test]
fn cube_in_ball_monotonicity() {
    let h = 1.0 / 6.0;
    let ball = make_geometry(
        &Shape::Ball3d {
            center: [0.0; 3],
            radius: 0.5,
        },
        h,
    )
    .unwrap();
    let cube = ball
        .retain("cube", |p| p.iter().all(|c| c.abs() <= 0.3))
        .unwrap();
    let rcv = make_geometry(
        &Shape::Cube3d {
            center: [2.0, 0.0, 0.0],
            side: 0.5,
        },
        h,
    )
    .unwrap();
    let report = verify_monotonicity(&cube, &ball, &rcv, &rcv, K).unwrap();
    assert!(report.passed, "{}", report.worst());
}

#[test]
fn coarse_sphere_shell_top_values() {
    let h = 1.0 / 6.0;
    let ball = make_geometry(
        &Shape::Ball3d {
            center: [0.0; 3],
            radius: 0.5,
        },
        h,
    )
    .unwrap();
    let shell = make_geometry(
        &Shape::Shell3d {
            center: [0.0; 3],
            inner: 1.0,
            outer: 1.3,
        },
        h,
    )
    .unwrap();
    let geom = BoundingGeometry3D::new(K, 0.5, 0.15, 0.5, 1.0, 1.0)
        .unwrap()
        .with_core(Core::Source);
    let exact = strength_spectrum_3d(&geom, 20, Enumeration::default())
        .unwrap()
        .expanded();
    let sigma = singular_values(&assemble(&ball, &shell, K).unwrap()).unwrap();
    for (s, e) in sigma.iter().zip(&exact).take(3) {
        let err = (s * s / e - 1.0).abs();
        assert!(err < 0.15, "{} vs {e}", s * s);
    }
}

#[test]
fn frobenius_norm_matches_monte_carlo_and_exceeds_lower_bound() {
    let (s, r) = square_pair(1.0 / 20.0);
    let gm = assemble(&s, &r, K).unwrap();
    let f = gm.matrix.frobenius_sq();
    let side = 1.0 / 2f64.sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let n = 400_000;
    let mut acc = 0.0;
    for _ in 0..n {
        let a = [
            rng.gen_range(-0.5..0.5) * side,
            rng.gen_range(-0.5..0.5) * side,
            0.0,
        ];
        let b = [
            2.0 + rng.gen_range(-0.5..0.5) * side,
            rng.gen_range(-0.5..0.5) * side,
            0.0,
        ];
        acc += scalar_green_2d(K, &a, &b).unwrap().norm_sqr();
    }
    let mc = acc / n as f64 * 0.25;
    assert!((f / mc - 1.0).abs() < 0.02, "{f} vs {mc}");
    assert!(f >= sum_rule_lower_2d(&fig2b()).unwrap());

    let v = 1.0 / (3.0 * 3f64.sqrt());
    let c = make_geometry(
        &Shape::Cube3d {
            center: [0.0; 3],
            side: 1.0 / 3f64.sqrt(),
        },
        1.0 / 6.0,
    )
    .unwrap();
    let d = c.translated([2.0, 0.0, 0.0]);
    let f3 = assemble(&c, &d, K).unwrap().matrix.frobenius_sq();
    let g3 = BoundingGeometry3D::new(K, 0.5, 0.5, 1.0, v, v).unwrap();
    assert!(f3 >= sum_rule_lower_3d(&g3, true).unwrap());
    assert!(f3 >= sum_rule_lower_3d(&g3, false).unwrap());
}
