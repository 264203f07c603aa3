//! Triangles and the two classical quadrilaterals, built at the canonical
//! base point of a [`CurvedPlane`].
//!
//! Conventions: the trirectangular (Lambert) quadrilateral is `A B D C` with
//! right angles at `A`, `B`, `C` and the free angle at `D`; `a = AB` and
//! `b = AC` meet at `A`. The birectangular isosceles (Saccheri) quadrilateral
//! is `A B C D` with base `AB`, equal legs `AD` and `BC` perpendicular to it,
//! and summit `DC`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{CurvedPlane, Geodesic, Point};
use crate::trig;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub vertices: [Point; 3],
    /// `sides[i]` is opposite `vertices[i]`.
    pub sides: [f64; 3],
    /// `angles[i]` is at `vertices[i]`.
    pub angles: [f64; 3],
    pub angle_sum: f64,
    /// `angle_sum - pi`; negative values are a defect.
    pub excess: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambertQuad {
    /// `[A, B, D, C]`.
    pub vertices: [Point; 4],
    pub a: f64,
    pub b: f64,
    pub phi: f64,
}

impl LambertQuad {
    pub fn corner(&self) -> Point {
        self.vertices[0]
    }

    pub fn free_vertex(&self) -> Point {
        self.vertices[2]
    }

    /// `BD`, opposite `AC`.
    pub fn side_bd(&self, plane: &CurvedPlane) -> f64 {
        plane.distance(&self.vertices[1], &self.vertices[2])
    }

    /// `CD`, opposite `AB`.
    pub fn side_cd(&self, plane: &CurvedPlane) -> f64 {
        plane.distance(&self.vertices[3], &self.vertices[2])
    }

    /// Angles at `A`, `B`, `D`, `C` measured on the vertices.
    pub fn measured_angles(&self, plane: &CurvedPlane) -> Result<[f64; 4]> {
        let [a, b, d, c] = self.vertices;
        Ok([
            plane.angle_at(&a, &b, &c)?,
            plane.angle_at(&b, &a, &d)?,
            plane.angle_at(&d, &b, &c)?,
            plane.angle_at(&c, &d, &a)?,
        ])
    }

    /// Measures a trirectangular quadrilateral from its vertices `[A, B, D, C]`.
    pub fn from_vertices(plane: &CurvedPlane, vertices: [Point; 4]) -> Result<Self> {
        let [a, b, d, c] = vertices;
        Ok(Self {
            vertices,
            a: plane.distance(&a, &b),
            b: plane.distance(&a, &c),
            phi: plane.angle_at(&d, &b, &c)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaccheriQuad {
    pub base: f64,
    pub leg: f64,
    pub summit: f64,
    pub summit_angle: f64,
    /// The angle at `C`, equal to `summit_angle` by symmetry.
    pub summit_angle_c: f64,
    /// `[A, B, C, D]`.
    pub vertices: [Point; 4],
}

impl SaccheriQuad {
    pub fn base_line(&self, plane: &CurvedPlane) -> Result<Geodesic> {
        plane.geodesic_through(&self.vertices[0], &self.vertices[1])
    }

    /// The perpendicular bisector of the base.
    pub fn axis(&self, plane: &CurvedPlane) -> Result<Geodesic> {
        let base = self.base_line(plane)?;
        Ok(plane.perpendicular_at(&base, self.base / 2.0))
    }
}

pub fn build_triangle(plane: &CurvedPlane, p: &Point, q: &Point, r: &Point) -> Result<Triangle> {
    let sides = [
        plane.distance(q, r),
        plane.distance(p, r),
        plane.distance(p, q),
    ];
    if sides.iter().any(|&s| s <= plane.eps()) {
        return Err(Error::DegenerateInput("coincident vertices".into()));
    }
    let angles = [
        plane.angle_at(p, q, r)?,
        plane.angle_at(q, r, p)?,
        plane.angle_at(r, p, q)?,
    ];
    if angles.iter().any(|&a| a <= plane.eps() || PI - a <= plane.eps()) {
        return Err(Error::DegenerateInput("collinear vertices".into()));
    }
    let angle_sum = angles.iter().sum::<f64>();
    Ok(Triangle {
        vertices: [*p, *q, *r],
        sides,
        angles,
        angle_sum,
        excess: angle_sum - PI,
    })
}

/// Area: `excess / K` when curved, Heron's formula (Kahan's arrangement)
/// when flat.
pub fn area(plane: &CurvedPlane, t: &Triangle) -> f64 {
    if plane.is_flat() {
        let mut s = t.sides;
        s.sort_by(|x, y| y.total_cmp(x));
        let [a, b, c] = s;
        let prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
        return 0.25 * prod.max(0.0).sqrt();
    }
    t.excess / plane.curvature()
}

/// Side of the equilateral triangle whose vertex angle is `alpha`.
pub fn equilateral_from_angle(plane: &CurvedPlane, alpha: f64) -> Result<f64> {
    let k = plane.curvature();
    let third = PI / 3.0;
    let feasible = if k < 0.0 {
        alpha > 0.0 && alpha < third
    } else if k > 0.0 {
        alpha > third && alpha < FRAC_PI_2
    } else {
        return Err(Error::WrongGeometry {
            required: "K != 0",
            curvature: k,
        });
    };
    if !feasible {
        return Err(Error::InfeasibleAngle(alpha));
    }
    // cos_k(s) = cos(alpha) / (1 - cos(alpha)); the difference from 1 is
    // taken through a product of sines so angles near pi/3 keep precision.
    let num = (4.0 * ((alpha + third) / 2.0).sin() * ((alpha - third) / 2.0).sin()).abs();
    let den = 2.0 * (1.0 - alpha.cos());
    let half = (num / den).sqrt();
    Ok(2.0 * trig::asin_k(k, half / plane.kappa()))
}

/// Vertex angle of the equilateral triangle with the given side.
pub fn equilateral_angle(plane: &CurvedPlane, side: f64) -> Result<f64> {
    trig::angle_from_sides(plane, side, side, side)
}

fn spherical_cap(plane: &CurvedPlane, what: &str, lengths: &[f64]) -> Result<()> {
    for &l in lengths {
        if !(l.is_finite() && l > plane.eps()) {
            return Err(Error::InvalidParameter(format!(
                "{what} lengths must exceed the tolerance, got {l}"
            )));
        }
        if plane.curvature() > 0.0 && l >= plane.hemisphere_cap() {
            return Err(Error::DegenerateInput(format!(
                "{what} length {l} reaches the pole"
            )));
        }
    }
    Ok(())
}

pub fn build_lambert_quad(plane: &CurvedPlane, a: f64, b: f64) -> Result<LambertQuad> {
    spherical_cap(plane, "Lambert side", &[a, b])
        .map_err(|e| match e {
            Error::DegenerateInput(m) => Error::InvalidParameter(m),
            other => other,
        })?;
    let corner = plane.origin();
    let ab = plane.ray_from_origin(0.0);
    let ac = plane.ray_from_origin(FRAC_PI_2);
    let b_pt = plane.point_at(&ab, a);
    let c_pt = plane.point_at(&ac, b);
    let at_b = plane.perpendicular_at(&ab, a);
    let at_c = plane.perpendicular_at(&ac, b);
    let meet = plane.intersect(&at_b, &at_c);
    let d = match meet.nearest_to(plane, &corner) {
        Some(d) => d,
        None => {
            let gap = plane
                .common_perpendicular(&at_b, &at_c)
                .map(|cp| cp.length)
                .unwrap_or(0.0);
            return Err(Error::DivergentSides { gap });
        }
    };
    LambertQuad::from_vertices(plane, [corner, b_pt, d, c_pt])
}

pub fn build_saccheri_quad(plane: &CurvedPlane, base: f64, leg: f64) -> Result<SaccheriQuad> {
    spherical_cap(plane, "Saccheri", &[base, leg])?;
    let line = plane.ray_from_origin(0.0);
    let a = plane.point_at(&line, -base / 2.0);
    let b = plane.point_at(&line, base / 2.0);
    let d = plane.point_at(&plane.perpendicular_at(&line, -base / 2.0), leg);
    let c = plane.point_at(&plane.perpendicular_at(&line, base / 2.0), leg);
    Ok(SaccheriQuad {
        base: plane.distance(&a, &b),
        leg,
        summit: plane.distance(&c, &d),
        summit_angle: plane.angle_at(&d, &a, &c)?,
        summit_angle_c: plane.angle_at(&c, &b, &d)?,
        vertices: [a, b, c, d],
    })
}

/// Cuts a Saccheri quadrilateral along its axis of symmetry.
///
/// Returns the half over `A` as `[M, A, D, N]` and the half over `B` as
/// `[M, B, C, N]`, where `M` and `N` are the midpoints of base and summit.
pub fn split_saccheri(plane: &CurvedPlane, q: &SaccheriQuad) -> Result<(LambertQuad, LambertQuad)> {
    let [a, b, c, d] = q.vertices;
    let base = q.base_line(plane)?;
    let m = plane.point_at(&base, q.base / 2.0);
    let axis = q.axis(plane)?;
    let summit = plane.geodesic_through(&d, &c)?;
    let n = plane
        .intersect(&axis, &summit)
        .nearest_to(plane, &m)
        .ok_or_else(|| Error::DegenerateInput("axis misses the summit".into()))?;
    let left = LambertQuad::from_vertices(plane, [m, a, d, n])?;
    let right = LambertQuad::from_vertices(plane, [m, b, c, n])?;
    Ok((left, right))
}

/// `DF / AF` for the equilateral triangle `ABC` with the given side, where
/// `F` is the midpoint of `BC` and `D` the meeting point of the medians.
pub fn median_ratio(plane: &CurvedPlane, side: f64) -> Result<(f64, Point)> {
    if !(side.is_finite() && side > plane.eps()) {
        return Err(Error::DegenerateInput(format!("side {side} too short")));
    }
    if plane.curvature() > 0.0 && side >= plane.hemisphere_cap() {
        return Err(Error::InvalidParameter(format!(
            "side {side} leaves the hemisphere"
        )));
    }
    let alpha = equilateral_angle(plane, side)?;
    let a = plane.origin();
    let b = plane.polar(side, -alpha / 2.0);
    let c = plane.polar(side, alpha / 2.0);
    let f = plane.midpoint(&b, &c)?;
    let e = plane.midpoint(&a, &c)?;
    let af = plane.geodesic_through(&a, &f)?;
    let be = plane.geodesic_through(&b, &e)?;
    let d = plane
        .intersect(&af, &be)
        .nearest_to(plane, &a)
        .ok_or_else(|| Error::DegenerateInput("medians do not meet".into()))?;
    Ok((plane.distance(&d, &f) / plane.distance(&a, &f), d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(k: f64) -> CurvedPlane {
        CurvedPlane::with_curvature(k).unwrap()
    }

    fn octant(s: &CurvedPlane) -> Triangle {
        let p = s.point([1.0, 0.0, 0.0]).unwrap();
        let q = s.point([0.0, 1.0, 0.0]).unwrap();
        build_triangle(s, &s.origin(), &p, &q).unwrap()
    }

    #[test]
    fn triangle_examples() {
        let s = plane(1.0);
        let t = octant(&s);
        assert!((t.angle_sum - 1.5 * PI).abs() < 1e-14);
        assert!((t.excess - FRAC_PI_2).abs() < 1e-14);

        let e = plane(0.0);
        let t = build_triangle(
            &e,
            &e.origin(),
            &e.point([3.0, 0.0, 1.0]).unwrap(),
            &e.point([0.0, 4.0, 1.0]).unwrap(),
        )
        .unwrap();
        assert!((t.angle_sum - PI).abs() < 1e-15);
        assert!((area(&e, &t) - 6.0).abs() < 1e-14);

        let h = plane(-1.0);
        let alpha = equilateral_angle(&h, 1.0).unwrap();
        let t = build_triangle(&h, &h.origin(), &h.polar(1.0, 0.0), &h.polar(1.0, alpha)).unwrap();
        // 3 x 0.91879787217802737 - pi, frozen from a 40-digit oracle.
        assert!((t.excess + 0.385_199_037_055_711_1).abs() < 1e-12);
        assert!((area(&h, &t) - 0.385_199_037_055_711_1).abs() < 1e-12);
    }

    #[test]
    fn girard_octant_area() {
        let s = plane(1.0);
        assert!((area(&s, &octant(&s)) - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn degenerate_triangles_are_rejected() {
        let e = plane(0.0);
        let p = e.origin();
        let q = e.point([1.0, 0.0, 1.0]).unwrap();
        let r = e.point([2.0, 0.0, 1.0]).unwrap();
        assert!(matches!(build_triangle(&e, &p, &q, &r), Err(Error::DegenerateInput(_))));
        assert!(matches!(build_triangle(&e, &p, &p, &r), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn equilateral_from_angle_examples() {
        assert_eq!(
            equilateral_from_angle(&plane(-1.0), PI / 3.0),
            Err(Error::InfeasibleAngle(PI / 3.0))
        );
        let s = equilateral_from_angle(&plane(1.0), FRAC_PI_2 - 1e-12).unwrap();
        assert!((s - FRAC_PI_2).abs() < 1e-9);
        assert!(equilateral_from_angle(&plane(1.0), FRAC_PI_2).is_err());
        assert!(matches!(
            equilateral_from_angle(&plane(0.0), 1.0),
            Err(Error::WrongGeometry { .. })
        ));
    }

    #[test]
    fn lambert_examples() {
        let q = build_lambert_quad(&plane(0.0), 1.0, 2.0).unwrap();
        assert!((q.phi - FRAC_PI_2).abs() < 1e-12);
        let q = build_lambert_quad(&plane(-1.0), 0.5, 0.5).unwrap();
        assert!((q.phi - 1.295_803_204_775_735_4).abs() < 1e-12);
        for angle in &q.measured_angles(&plane(-1.0)).unwrap()[..2] {
            assert!((angle - FRAC_PI_2).abs() < 1e-12);
        }
        match build_lambert_quad(&plane(-1.0), 1.0, 1.0) {
            Err(Error::DivergentSides { gap }) => assert!(gap > 0.0),
            other => panic!("expected divergence, got {other:?}"),
        }
        let q = build_lambert_quad(&plane(1.0), 0.5, 0.7).unwrap();
        assert!(q.phi > FRAC_PI_2);
    }

    #[test]
    fn saccheri_examples() {
        let e = plane(0.0);
        let q = build_saccheri_quad(&e, 2.0, 1.0).unwrap();
        assert!((q.summit - 2.0).abs() < 1e-14);
        assert!((q.summit_angle - FRAC_PI_2).abs() < 1e-14);

        let h = plane(-1.0);
        let q = build_saccheri_quad(&h, 1.0, 1.0).unwrap();
        assert!((q.summit - 1.471_720_882_725_903_7).abs() < 1e-12);
        assert!((q.summit_angle - 1.073_281_005_156_154_4).abs() < 1e-12);
        assert!((q.summit_angle - q.summit_angle_c).abs() < 1e-12);

        let s = plane(1.0);
        let q = build_saccheri_quad(&s, 0.5, 0.5).unwrap();
        assert!((q.summit - 0.437_720_905_521_508_4).abs() < 1e-12);
        assert!((q.summit_angle - 1.692_607_688_153_373).abs() < 1e-12);
        assert!(matches!(
            build_saccheri_quad(&s, 0.5, 2.0),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn split_saccheri_halves() {
        for k in [-1.0, 0.0, 1.0] {
            let p = plane(k);
            let q = build_saccheri_quad(&p, 1.0, 0.8).unwrap();
            let (left, right) = split_saccheri(&p, &q).unwrap();
            assert!((left.phi - q.summit_angle).abs() < 1e-9);
            assert!((right.phi - q.summit_angle).abs() < 1e-9);
            assert!((left.a - q.base / 2.0).abs() < 1e-9);
            assert!((left.a - right.a).abs() < 1e-9);
            let axis = q.axis(&p).unwrap();
            for (l, r) in left.vertices.iter().zip(&right.vertices) {
                assert!(p.distance(&p.reflect(r, &axis), l) < 1e-9);
            }
        }
        let e = plane(0.0);
        let (left, _) = split_saccheri(&e, &build_saccheri_quad(&e, 2.0, 1.0).unwrap()).unwrap();
        assert!((left.a - 1.0).abs() < 1e-12 && (left.b - 1.0).abs() < 1e-12);
    }

    #[test]
    fn median_ratio_examples() {
        let (r, _) = median_ratio(&plane(0.0), 1.7).unwrap();
        assert!((r - 1.0 / 3.0).abs() < 1e-9);
        let (r, _) = median_ratio(&plane(-1.0), 1.0).unwrap();
        assert!((r - 0.316_219_932_806_259_07).abs() < 1e-12);
        let (r, _) = median_ratio(&plane(1.0), 0.5).unwrap();
        assert!((r - 0.338_061_899_648_091_1).abs() < 1e-12);
        assert!(matches!(median_ratio(&plane(1.0), 0.0), Err(Error::DegenerateInput(_))));
    }
}
