//! Generalized trigonometry of the constant-curvature plane.
//!
//! `cos_k` and `sin_k` interpolate between the circular functions (`K > 0`),
//! the hyperbolic ones (`K < 0`) and the flat limits `1` and `x`. Every
//! formula below is written once in terms of them.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::plane::CurvedPlane;

pub fn cos_k(k: f64, s: f64) -> f64 {
    if k > 0.0 {
        (s * k.sqrt()).cos()
    } else if k < 0.0 {
        (s * (-k).sqrt()).cosh()
    } else {
        1.0
    }
}

pub fn sin_k(k: f64, s: f64) -> f64 {
    if k > 0.0 {
        let r = k.sqrt();
        (s * r).sin() / r
    } else if k < 0.0 {
        let r = (-k).sqrt();
        (s * r).sinh() / r
    } else {
        s
    }
}

/// Inverse of `sin_k` on its principal branch.
pub fn asin_k(k: f64, x: f64) -> f64 {
    if k > 0.0 {
        let r = k.sqrt();
        (x * r).clamp(-1.0, 1.0).asin() / r
    } else if k < 0.0 {
        let r = (-k).sqrt();
        (x * r).asinh() / r
    } else {
        x
    }
}

fn check_sides(plane: &CurvedPlane, sides: &[f64]) -> Result<()> {
    for &s in sides {
        if !(s.is_finite() && s >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "side lengths must be non-negative, got {s}"
            )));
        }
        if s > plane.antipodal_distance() + plane.tol(s) {
            return Err(Error::InvalidParameter(format!(
                "side {s} exceeds the antipodal distance {}",
                plane.antipodal_distance()
            )));
        }
    }
    Ok(())
}

/// Side opposite the angle `gamma` enclosed by sides `a` and `b`.
///
/// Uses the half-angle arrangement
/// `sin_k(c/2)^2 = sin_k((a-b)/2)^2 + sin_k(a) sin_k(b) sin^2(gamma/2)`
/// of `cos_k(c) = cos_k(a) cos_k(b) + K sin_k(a) sin_k(b) cos(gamma)`, which
/// keeps full relative precision for short sides.
pub fn law_of_cosines(plane: &CurvedPlane, a: f64, b: f64, gamma: f64) -> Result<f64> {
    check_sides(plane, &[a, b])?;
    if !(0.0..=PI).contains(&gamma) {
        return Err(Error::InvalidParameter(format!(
            "angle must lie in [0, pi], got {gamma}"
        )));
    }
    let k = plane.curvature();
    if k == 0.0 {
        let half = (gamma / 2.0).sin();
        return Ok(((a - b).powi(2) + 4.0 * a * b * half * half).sqrt());
    }
    let h = sin_k(k, (a - b) / 2.0).powi(2)
        + sin_k(k, a) * sin_k(k, b) * (gamma / 2.0).sin().powi(2);
    Ok(2.0 * asin_k(k, h.max(0.0).sqrt()))
}

/// Angle opposite side `c` in the triangle with sides `a`, `b`, `c`.
pub fn angle_from_sides(plane: &CurvedPlane, a: f64, b: f64, c: f64) -> Result<f64> {
    check_sides(plane, &[a, b, c])?;
    let k = plane.curvature();
    let denom = sin_k(k, a) * sin_k(k, b);
    if denom <= 0.0 {
        return Err(Error::DegenerateInput("zero-length side".into()));
    }
    let s2 = (sin_k(k, c / 2.0).powi(2) - sin_k(k, (a - b) / 2.0).powi(2)) / denom;
    Ok(2.0 * s2.clamp(0.0, 1.0).sqrt().asin())
}

/// Lobachevsky's angle of parallelism `tan(Pi/2) = exp(-p sqrt(-K))`.
pub fn angle_of_parallelism(plane: &CurvedPlane, p: f64) -> Result<f64> {
    if plane.curvature() >= 0.0 {
        return Err(Error::WrongGeometry {
            required: "K < 0",
            curvature: plane.curvature(),
        });
    }
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "distance must be positive, got {p}"
        )));
    }
    Ok(2.0 * (-p * plane.kappa()).exp().atan())
}

/// Distance at which the angle of parallelism equals `angle`.
pub fn parallelism_distance(plane: &CurvedPlane, angle: f64) -> Result<f64> {
    if plane.curvature() >= 0.0 {
        return Err(Error::WrongGeometry {
            required: "K < 0",
            curvature: plane.curvature(),
        });
    }
    if !(angle > 0.0 && angle < FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!(
            "parallelism angle must lie in (0, pi/2), got {angle}"
        )));
    }
    Ok(-(angle / 2.0).tan().ln() / plane.kappa())
}

/// `|c_hyperbolic - c_imaginary|`: the side given by the hyperbolic law of
/// cosines against the spherical law evaluated on a sphere of imaginary
/// radius `i r`, `r = 1/sqrt(-K)`, with complex circular functions.
///
/// A non-negligible imaginary part of the spherical result counts toward the
/// residual.
pub fn imaginary_correspondence_residual(
    plane: &CurvedPlane,
    a: f64,
    b: f64,
    gamma: f64,
) -> Result<f64> {
    if plane.curvature() >= 0.0 {
        return Err(Error::WrongGeometry {
            required: "K < 0",
            curvature: plane.curvature(),
        });
    }
    let c_hyp = law_of_cosines(plane, a, b, gamma)?;
    let rho = Complex64::new(0.0, 1.0 / plane.kappa());
    let arc = |s: f64| Complex64::new(s, 0.0) / rho;
    // Spherical half-angle form with the sides read on the sphere of radius rho.
    let lhs = (arc(a - b) / 2.0).sin().powi(2)
        + arc(a).sin() * arc(b).sin() * (gamma / 2.0).sin().powi(2);
    let c_sph = rho * lhs.sqrt().asin() * 2.0;
    let c_imag = c_sph.re.abs();
    Ok((c_hyp - c_imag).hypot(c_sph.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(k: f64) -> CurvedPlane {
        CurvedPlane::with_curvature(k).unwrap()
    }

    #[test]
    fn law_of_cosines_examples() {
        assert!((law_of_cosines(&plane(0.0), 3.0, 4.0, FRAC_PI_2).unwrap() - 5.0).abs() < 1e-14);
        let oct = law_of_cosines(&plane(1.0), FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap();
        assert!((oct - FRAC_PI_2).abs() < 1e-15);
        // Frozen from a 40-digit construction in the hyperboloid model.
        let c = law_of_cosines(&plane(-1.0), 1.0, 1.0, PI / 3.0).unwrap();
        assert!((c - 1.116_326_919_023_212_2).abs() < 1e-14);
    }

    #[test]
    fn law_of_cosines_rejects_long_spherical_sides() {
        assert!(matches!(
            law_of_cosines(&plane(1.0), 4.0, 1.0, 1.0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(law_of_cosines(&plane(1.0), 1.0, 1.0, 4.0).is_err());
    }

    #[test]
    fn angle_from_sides_inverts_law_of_cosines() {
        for k in [-1.0, 0.0, 1.0] {
            let p = plane(k);
            let c = law_of_cosines(&p, 0.8, 1.1, 1.3).unwrap();
            assert!((angle_from_sides(&p, 0.8, 1.1, c).unwrap() - 1.3).abs() < 1e-12);
        }
    }

    #[test]
    fn angle_of_parallelism_examples() {
        let h = plane(-1.0);
        let quarter = angle_of_parallelism(&h, (1.0 + 2f64.sqrt()).ln()).unwrap();
        assert!((quarter - PI / 4.0).abs() < 1e-15);
        let at_one = angle_of_parallelism(&h, 1.0).unwrap();
        assert!((at_one - 0.705_026_843_555_238).abs() < 1e-14);
        assert!(FRAC_PI_2 - angle_of_parallelism(&h, 1e-9).unwrap() < 1e-8);
        assert!(matches!(
            angle_of_parallelism(&plane(0.0), 1.0),
            Err(Error::WrongGeometry { .. })
        ));
        assert!(matches!(
            angle_of_parallelism(&h, 0.0),
            Err(Error::InvalidParameter(_))
        ));
        let p = parallelism_distance(&h, at_one).unwrap();
        assert!((p - 1.0).abs() < 1e-14);
    }

    #[test]
    fn imaginary_correspondence_examples() {
        let h = plane(-1.0);
        for gamma in [0.3, 1.7, 3.0] {
            let r = imaginary_correspondence_residual(&h, 0.0, 2.0, gamma).unwrap();
            assert!(r < 1e-15, "{r}");
        }
        let r = imaginary_correspondence_residual(&h, 1.0, 1.0, PI / 3.0).unwrap();
        assert!(r < 1e-12);
        assert!(imaginary_correspondence_residual(&plane(1.0), 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn law_of_cosines_is_continuous_at_flat() {
        for (a, b, g) in [(3.0, 2.5, 0.4), (0.1, 2.9, 3.1), (1.5, 1.5, 1.5)] {
            let flat = law_of_cosines(&plane(0.0), a, b, g).unwrap();
            for k in [-1e-8, 1e-8] {
                assert!((law_of_cosines(&plane(k), a, b, g).unwrap() - flat).abs() < 1e-6);
            }
        }
    }
}
