use std::f64::consts::{FRAC_PI_2, PI};

use parallax_core::counterexamples;
use parallax_core::figures::{
    area, build_lambert_quad, build_saccheri_quad, build_triangle, equilateral_angle,
    equilateral_from_angle, split_saccheri,
};
use parallax_core::propositions::{replay, run_check, SamplingConfig};
use parallax_core::report::to_canonical_json;
use parallax_core::trig::{angle_of_parallelism, law_of_cosines};
use parallax_core::{CurvedPlane, Error, Point};
use proptest::prelude::*;

fn plane(k: f64) -> CurvedPlane {
    CurvedPlane::with_curvature(k).unwrap()
}

fn curvature() -> impl Strategy<Value = f64> {
    prop_oneof![Just(-1.0), Just(0.0), Just(1.0), Just(-0.25), Just(4.0)]
}

/// Polar coordinates inside a disk that keeps spherical figures in one
/// hemisphere.
fn polar(k: f64) -> impl Strategy<Value = (f64, f64)> {
    let rmax = if k > 0.0 { 0.7 / k.sqrt() } else { 2.0 };
    (0.0..rmax, -PI..PI)
}

fn pts(k: f64, n: usize) -> impl Strategy<Value = Vec<Point>> {
    let p = plane(k);
    prop::collection::vec(polar(k), n).prop_map(move |v| v.into_iter().map(|(r, t)| p.polar(r, t)).collect())
}

fn with_points(n: usize) -> impl Strategy<Value = (f64, Vec<Point>)> {
    curvature().prop_flat_map(move |k| (Just(k), pts(k, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn distance_is_a_metric((k, v) in with_points(3)) {
        let p = plane(k);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert!((p.distance(a, b) - p.distance(b, a)).abs() <= 1e-12);
        prop_assert!(p.distance(a, a) <= 1e-12);
        prop_assert!(p.distance(a, c) <= p.distance(a, b) + p.distance(b, c) + 1e-9);
    }

    #[test]
    fn point_at_is_isometric((k, v) in with_points(1), dir in -PI..PI, s in -1.5f64..1.5, t in -1.5f64..1.5) {
        let p = plane(k);
        let g = p.rotate_direction(&p.ray_from_origin(0.0), &p.origin(), dir);
        let g = p.geodesic(v[0], *g.dir()).unwrap_or(g);
        let len = if k > 0.0 { (s - t).abs() < PI / k.sqrt() } else { true };
        prop_assume!(len);
        let d = p.distance(&p.point_at(&g, s), &p.point_at(&g, t));
        prop_assert!((d - (s - t).abs()).abs() <= 1e-9, "{} vs {}", d, (s - t).abs());
    }

    #[test]
    fn reflection_is_an_isometric_involution((k, v) in with_points(4)) {
        let p = plane(k);
        prop_assume!(p.distance(&v[0], &v[1]) > 1e-3);
        let g = p.geodesic_through(&v[0], &v[1]).unwrap();
        let (a, b) = (&v[2], &v[3]);
        let (ra, rb) = (p.reflect(a, &g), p.reflect(b, &g));
        prop_assert!((p.distance(a, b) - p.distance(&ra, &rb)).abs() <= 1e-9);
        prop_assert!(p.distance(&p.reflect(&ra, &g), a) <= 1e-9);
    }

    #[test]
    fn area_is_invariant_under_reflection((k, v) in with_points(5)) {
        let p = plane(k);
        prop_assume!(p.distance(&v[3], &v[4]) > 1e-3);
        let Ok(t) = build_triangle(&p, &v[0], &v[1], &v[2]) else { return Ok(()) };
        let g = p.geodesic_through(&v[3], &v[4]).unwrap();
        let [a, b, c] = t.vertices.map(|q| p.reflect(&q, &g));
        let r = build_triangle(&p, &a, &b, &c).unwrap();
        prop_assert!((area(&p, &t) - area(&p, &r)).abs() <= 1e-9);
    }

    #[test]
    fn excess_has_the_sign_of_curvature((k, v) in with_points(3)) {
        let p = plane(k);
        let Ok(t) = build_triangle(&p, &v[0], &v[1], &v[2]) else { return Ok(()) };
        prop_assume!(t.sides.iter().all(|&s| s > 0.05));
        if k == 0.0 {
            prop_assert!(t.excess.abs() <= 1e-9);
        } else {
            prop_assert_eq!(t.excess.signum(), k.signum());
        }
    }

    #[test]
    fn law_of_cosines_is_continuous_at_flat(a in 0.01f64..3.0, b in 0.01f64..3.0, gamma in 0.0..PI) {
        let flat = law_of_cosines(&plane(0.0), a, b, gamma).unwrap();
        for k in [-1e-8, 1e-8] {
            let c = law_of_cosines(&plane(k), a, b, gamma).unwrap();
            prop_assert!((c - flat).abs() < 1e-6);
        }
    }

    #[test]
    fn parallelism_angle_decreases(p in 0.01f64..8.0, dp in 1e-3f64..1.0) {
        let h = plane(-1.0);
        let (a, b) = (angle_of_parallelism(&h, p).unwrap(), angle_of_parallelism(&h, p + dp).unwrap());
        prop_assert!(b < a && a < FRAC_PI_2);
    }

    #[test]
    fn equilateral_side_inverts_the_angle(k in prop_oneof![Just(-1.0), Just(1.0), Just(-4.0)], t in 0.01f64..0.99) {
        let p = plane(k);
        let alpha = if k < 0.0 { t * PI / 3.0 } else { PI / 3.0 + t * PI / 6.0 };
        let side = equilateral_from_angle(&p, alpha).unwrap();
        prop_assert!((equilateral_angle(&p, side).unwrap() - alpha).abs() <= 1e-8);
    }

    #[test]
    fn lambert_free_angle_follows_curvature(k in prop_oneof![Just(-1.0), Just(0.0), Just(1.0)], a in 0.1f64..1.2, b in 0.1f64..1.2) {
        let p = plane(k);
        match build_lambert_quad(&p, a, b) {
            Ok(q) => {
                let d = q.phi - FRAC_PI_2;
                if k == 0.0 {
                    prop_assert!(d.abs() <= 1e-9);
                } else {
                    prop_assert!(d * k > 1e-9);
                }
                let m = q.measured_angles(&p).unwrap();
                for right in &m[..2] {
                    prop_assert!((right - FRAC_PI_2).abs() <= 1e-9);
                }
                prop_assert!((m[3] - FRAC_PI_2).abs() <= 1e-9);
            }
            Err(Error::DivergentSides { gap }) => prop_assert!(k < 0.0 && gap >= 0.0),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn saccheri_summit_follows_curvature(k in prop_oneof![Just(-1.0), Just(0.0), Just(1.0)], base in 0.1f64..1.4, leg in 0.1f64..1.4) {
        let p = plane(k);
        let q = build_saccheri_quad(&p, base, leg).unwrap();
        prop_assert!((q.summit_angle - q.summit_angle_c).abs() <= 1e-9);
        if k == 0.0 {
            prop_assert!((q.summit_angle - FRAC_PI_2).abs() <= 1e-9);
            prop_assert!((q.summit - q.base).abs() <= 1e-9);
        } else {
            prop_assert!((q.summit_angle - FRAC_PI_2) * k > 1e-9);
            prop_assert!((q.summit - q.base) * k < 0.0);
        }
        let (l, r) = split_saccheri(&p, &q).unwrap();
        prop_assert!((l.a - r.a).abs() <= 1e-9);
        prop_assert!((l.phi - q.summit_angle).abs() <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdicts_are_deterministic_and_replayable(seed in any::<u64>(), k in prop_oneof![Just(-1.0), Just(0.0), Just(1.0)]) {
        let cfg = SamplingConfig::new(5, seed, 1.0, 0.05).unwrap();
        let p = plane(k);
        for id in ["LAM-15", "LAM-23", "LAM-50", "LAM-76", "LAM-81"] {
            let a = run_check(id, &p, &cfg).unwrap();
            let b = run_check(id, &p, &cfg).unwrap();
            prop_assert_eq!(to_canonical_json(&a).unwrap(), to_canonical_json(&b).unwrap());
            let text = serde_json::to_string(&a.witness.config).unwrap();
            let out = replay(id, &p, &serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert!((out.slack - a.min_margin).abs() <= 1e-12);
        }
    }

    #[test]
    fn khayyam_witness_replays(legs in 1.5f64..4.0) {
        let h = plane(-1.0);
        let w = counterexamples::khayyam_gap(&h, 1.0, legs).unwrap();
        let text = serde_json::to_string(&w).unwrap();
        let back: counterexamples::Witness = serde_json::from_str(&text).unwrap();
        prop_assert!(w.margin > 0.0);
        prop_assert!((counterexamples::replay(&back).unwrap() - w.margin).abs() <= 1e-12);
    }
}
