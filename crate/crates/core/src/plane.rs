//! Points, geodesics and metric primitives on the plane of constant
//! curvature `K`.
//!
//! All three geometries share one vector algebra on `R^3`:
//!
//! * `K > 0`: the sphere `x^2 + y^2 + z^2 = 1/K` with the Euclidean form.
//! * `K < 0`: the upper sheet of `x^2 + y^2 - t^2 = 1/K` with the Minkowski
//!   form of signature `(+, +, -)`.
//! * `K = 0`: the affine plane `z = 1`; tangent vectors have `z = 0` and the
//!   form is the Euclidean one on the first two coordinates.
//!
//! A geodesic is stored as a base point and a unit tangent. Its "left" unit
//! normal `n` is form-orthogonal to every point and tangent of the geodesic,
//! which makes perpendiculars, reflections, feet and intersections linear
//! algebra on `n`.

use std::f64::consts::PI;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trig;

pub type Vec3 = Vector3<f64>;

/// Default absolute tolerance used by [`CurvedPlane::with_curvature`].
pub const DEFAULT_EPS: f64 = 1e-9;

/// A geometry of constant curvature `K`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvedPlane {
    curvature: f64,
    eps: f64,
}

/// A point of the model embedding of a [`CurvedPlane`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Point(Vec3);

impl From<[f64; 3]> for Point {
    fn from(c: [f64; 3]) -> Self {
        Point(Vec3::new(c[0], c[1], c[2]))
    }
}

impl From<Point> for [f64; 3] {
    fn from(p: Point) -> Self {
        [p.0.x, p.0.y, p.0.z]
    }
}

impl Point {
    pub fn coords(&self) -> &Vec3 {
        &self.0
    }
}

/// A complete geodesic with unit-speed parameterization `s -> point_at(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    base: Point,
    #[serde(with = "vec3_serde")]
    dir: Vec3,
}

impl Geodesic {
    pub fn base(&self) -> Point {
        self.base
    }

    pub fn dir(&self) -> &Vec3 {
        &self.dir
    }
}

mod vec3_serde {
    use super::Vec3;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Vec3, s: S) -> Result<S::Ok, S::Error> {
        [v.x, v.y, v.z].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec3, D::Error> {
        let c = <[f64; 3]>::deserialize(d)?;
        Ok(Vec3::new(c[0], c[1], c[2]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntersectionKind {
    Empty,
    One,
    Two,
    Coincident,
}

/// Result of intersecting two geodesics.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionSet {
    pub kind: IntersectionKind,
    pub points: Vec<Point>,
}

impl IntersectionSet {
    fn empty() -> Self {
        Self {
            kind: IntersectionKind::Empty,
            points: Vec::new(),
        }
    }

    fn coincident() -> Self {
        Self {
            kind: IntersectionKind::Coincident,
            points: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.kind == IntersectionKind::Empty
    }

    /// The returned point closest to `reference`, if any.
    pub fn nearest_to(&self, plane: &CurvedPlane, reference: &Point) -> Option<Point> {
        self.points.iter().copied().min_by(|a, b| {
            plane
                .distance(a, reference)
                .total_cmp(&plane.distance(b, reference))
        })
    }
}

/// The common perpendicular of two disjoint geodesics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommonPerpendicular {
    pub foot_on_first: Point,
    pub foot_on_second: Point,
    pub length: f64,
}

impl CurvedPlane {
    /// `make_plane`: a plane of curvature `curvature` with absolute tolerance `eps`.
    pub fn new(curvature: f64, eps: f64) -> Result<Self> {
        if !curvature.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "curvature must be finite, got {curvature}"
            )));
        }
        if !(eps.is_finite() && eps > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tolerance must be positive, got {eps}"
            )));
        }
        Ok(Self { curvature, eps })
    }

    pub fn with_curvature(curvature: f64) -> Result<Self> {
        Self::new(curvature, DEFAULT_EPS)
    }

    pub fn curvature(&self) -> f64 {
        self.curvature
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// `sqrt(|K|)`.
    pub fn kappa(&self) -> f64 {
        self.curvature.abs().sqrt()
    }

    /// Sign of the curvature as -1, 0 or 1.
    pub fn sign(&self) -> i8 {
        if self.curvature > 0.0 {
            1
        } else if self.curvature < 0.0 {
            -1
        } else {
            0
        }
    }

    pub fn is_flat(&self) -> bool {
        self.curvature == 0.0
    }

    /// Length of a full geodesic on the sphere; infinite otherwise.
    pub fn circumference(&self) -> f64 {
        if self.curvature > 0.0 {
            2.0 * PI / self.kappa()
        } else {
            f64::INFINITY
        }
    }

    /// Distance from a point to its antipode on the sphere; infinite otherwise.
    pub fn antipodal_distance(&self) -> f64 {
        self.circumference() / 2.0
    }

    /// Largest safe figure size: a quarter great circle on the sphere.
    pub fn hemisphere_cap(&self) -> f64 {
        self.circumference() / 4.0
    }

    /// Tolerance scaled by the magnitude of the compared quantity.
    pub fn tol(&self, magnitude: f64) -> f64 {
        self.eps * magnitude.abs().max(1.0)
    }

    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.tol(a.abs().max(b.abs()))
    }

    pub fn cos_k(&self, s: f64) -> f64 {
        trig::cos_k(self.curvature, s)
    }

    pub fn sin_k(&self, s: f64) -> f64 {
        trig::sin_k(self.curvature, s)
    }

    /// Bilinear form of the model.
    pub fn form(&self, u: &Vec3, v: &Vec3) -> f64 {
        if self.curvature > 0.0 {
            u.dot(v)
        } else if self.curvature < 0.0 {
            u.x * v.x + u.y * v.y - u.z * v.z
        } else {
            u.x * v.x + u.y * v.y
        }
    }

    /// `G u` with `G = diag(1, 1, sign)`; turns Euclidean cross products into
    /// form-orthogonal vectors.
    fn raise(&self, u: Vec3) -> Vec3 {
        if self.curvature < 0.0 {
            Vec3::new(u.x, u.y, -u.z)
        } else {
            u
        }
    }

    fn model_radius(&self) -> f64 {
        1.0 / self.kappa()
    }

    /// Re-projects a raw vector onto the model surface.
    fn project(&self, v: Vec3) -> Result<Point> {
        if self.curvature == 0.0 {
            if !(v.x.is_finite() && v.y.is_finite()) {
                return Err(Error::DegenerateInput("non-finite coordinates".into()));
            }
            return Ok(Point(Vec3::new(v.x, v.y, 1.0)));
        }
        let r = self.model_radius();
        if self.curvature > 0.0 {
            let n = v.norm();
            if !(n.is_finite() && n > f64::MIN_POSITIVE) {
                return Err(Error::DegenerateInput("vector has no direction".into()));
            }
            return Ok(Point(v * (r / n)));
        }
        let q = -self.form(&v, &v);
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::DegenerateInput(
                "vector is not time-like; no hyperboloid point".into(),
            ));
        }
        let mut p = v * (r / q.sqrt());
        if p.z < 0.0 {
            p = -p;
        }
        Ok(Point(p))
    }

    /// Validates raw model coordinates against the embedding constraint and
    /// renormalizes them.
    pub fn point(&self, coords: [f64; 3]) -> Result<Point> {
        let v = Vec3::new(coords[0], coords[1], coords[2]);
        if !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite()) {
            return Err(Error::InvalidParameter("non-finite coordinates".into()));
        }
        if self.curvature == 0.0 {
            if v.z != 1.0 {
                return Err(Error::InvalidParameter(
                    "flat-plane points have third coordinate 1".into(),
                ));
            }
            return Ok(Point(v));
        }
        let target = 1.0 / self.curvature;
        let got = self.form(&v, &v);
        let slack = self.eps * (1.0 / self.curvature.abs()).max(1.0);
        // Large hyperboloid coordinates carry proportional rounding.
        let slack = slack.max(4.0 * f64::EPSILON * v.norm_squared());
        if (got - target).abs() > slack {
            return Err(Error::InvalidParameter(format!(
                "point off the model surface: <p,p> = {got}, expected {target}"
            )));
        }
        if self.curvature < 0.0 && v.z <= 0.0 {
            return Err(Error::InvalidParameter(
                "hyperboloid point on the lower sheet".into(),
            ));
        }
        self.project(v)
    }

    /// Canonical base point of every construction.
    pub fn origin(&self) -> Point {
        if self.curvature == 0.0 {
            Point(Vec3::new(0.0, 0.0, 1.0))
        } else {
            Point(Vec3::new(0.0, 0.0, self.model_radius()))
        }
    }

    /// The geodesic through the origin with initial direction at angle
    /// `theta` from the canonical first direction.
    pub fn ray_from_origin(&self, theta: f64) -> Geodesic {
        Geodesic {
            base: self.origin(),
            dir: Vec3::new(theta.cos(), theta.sin(), 0.0),
        }
    }

    /// Geodesic polar coordinates about the origin.
    pub fn polar(&self, r: f64, theta: f64) -> Point {
        self.point_at(&self.ray_from_origin(theta), r)
    }

    /// Builds a geodesic from a base point and any non-zero tangent direction.
    pub fn geodesic(&self, base: Point, dir: Vec3) -> Result<Geodesic> {
        let p = base.0;
        let mut u = if self.curvature == 0.0 {
            Vec3::new(dir.x, dir.y, 0.0)
        } else {
            dir - p * (self.curvature * self.form(&dir, &p))
        };
        let n2 = self.form(&u, &u);
        if !(n2.is_finite() && n2 > 0.0) {
            return Err(Error::DegenerateInput("zero tangent direction".into()));
        }
        u /= n2.sqrt();
        Ok(Geodesic { base, dir: u })
    }

    /// Geodesic distance.
    pub fn distance(&self, p: &Point, q: &Point) -> f64 {
        let (a, b) = (&p.0, &q.0);
        if self.curvature == 0.0 {
            return (a.x - b.x).hypot(a.y - b.y);
        }
        let k = self.kappa();
        if self.curvature > 0.0 {
            return a.cross(b).norm().atan2(a.dot(b)) / k;
        }
        let d = a - b;
        let chord2 = self.form(&d, &d).max(0.0);
        2.0 * (0.5 * k * chord2.sqrt()).asinh() / k
    }

    /// Unit tangent at `p` pointing toward `q`, or `None` when undefined.
    fn tangent_toward(&self, p: &Point, q: &Point) -> Option<Vec3> {
        let u = if self.curvature == 0.0 {
            Vec3::new(q.0.x - p.0.x, q.0.y - p.0.y, 0.0)
        } else {
            q.0 - p.0 * (self.curvature * self.form(&p.0, &q.0))
        };
        let n2 = self.form(&u, &u);
        (n2.is_finite() && n2 > 0.0).then(|| u / n2.sqrt())
    }

    fn check_distinct(&self, p: &Point, q: &Point) -> Result<f64> {
        let d = self.distance(p, q);
        if d <= self.eps {
            return Err(Error::DegenerateInput("coincident points".into()));
        }
        if self.curvature > 0.0 && self.antipodal_distance() - d <= self.tol(d) {
            return Err(Error::NonUniqueGeodesic);
        }
        Ok(d)
    }

    /// The geodesic based at `p` whose trace reaches `q` at parameter
    /// `distance(p, q)`.
    pub fn geodesic_through(&self, p: &Point, q: &Point) -> Result<Geodesic> {
        self.check_distinct(p, q)?;
        let dir = self
            .tangent_toward(p, q)
            .ok_or(Error::NonUniqueGeodesic)?;
        Ok(Geodesic { base: *p, dir })
    }

    pub fn point_at(&self, g: &Geodesic, s: f64) -> Point {
        let s = if self.curvature > 0.0 {
            s.rem_euclid(self.circumference())
        } else {
            s
        };
        let v = g.base.0 * self.cos_k(s) + g.dir * self.sin_k(s);
        // Unit-speed combinations stay on the surface; projection only
        // strips accumulated rounding.
        self.project(v).unwrap_or(g.base)
    }

    /// Unit tangent of `g` at parameter `s`.
    pub fn tangent_at(&self, g: &Geodesic, s: f64) -> Vec3 {
        g.dir * self.cos_k(s) - g.base.0 * (self.curvature * self.sin_k(s))
    }

    /// The unit normal of `g` on its left side.
    pub fn normal(&self, g: &Geodesic) -> Vec3 {
        if self.curvature == 0.0 {
            return Vec3::new(-g.dir.y, g.dir.x, 0.0);
        }
        let n = self.raise(g.base.0.cross(&g.dir));
        n / self.form(&n, &n).sqrt()
    }

    /// `<q, n>` for `K != 0`, the affine offset for `K = 0`.
    fn offset(&self, q: &Point, g: &Geodesic, n: &Vec3) -> f64 {
        if self.curvature == 0.0 {
            n.x * (q.0.x - g.base.0.x) + n.y * (q.0.y - g.base.0.y)
        } else {
            self.form(&q.0, n)
        }
    }

    /// Signed distance from `q` to the trace of `g`, positive on the left.
    pub fn signed_distance(&self, q: &Point, g: &Geodesic) -> f64 {
        let n = self.normal(g);
        let off = self.offset(q, g, &n);
        if self.curvature > 0.0 {
            let along = (q.0 - n * off).norm();
            return off.atan2(along) / self.kappa();
        }
        trig::asin_k(self.curvature, off)
    }

    /// Foot of the perpendicular from `p` to `g` and the distance to it.
    pub fn perpendicular_foot(&self, p: &Point, g: &Geodesic) -> Result<(Point, f64)> {
        let n = self.normal(g);
        let off = self.offset(p, g, &n);
        let d = self.signed_distance(p, g).abs();
        if self.curvature > 0.0 && self.hemisphere_cap() - d <= self.tol(d) {
            return Err(Error::NonUniqueFoot);
        }
        let foot = self.project(p.0 - n * off)?;
        Ok((foot, d))
    }

    /// The geodesic meeting `g` at a right angle at `point_at(g, s)`,
    /// heading to the left of `g`.
    pub fn perpendicular_at(&self, g: &Geodesic, s: f64) -> Geodesic {
        let base = self.point_at(g, s);
        let n = self.normal(g);
        self.geodesic(base, n).unwrap_or(Geodesic { base, dir: n })
    }

    /// Angle at `vertex` between the geodesics toward `a` and toward `b`.
    pub fn angle_at(&self, vertex: &Point, a: &Point, b: &Point) -> Result<f64> {
        self.check_distinct(vertex, a)?;
        self.check_distinct(vertex, b)?;
        let ta = self
            .tangent_toward(vertex, a)
            .ok_or(Error::NonUniqueGeodesic)?;
        let tb = self
            .tangent_toward(vertex, b)
            .ok_or(Error::NonUniqueGeodesic)?;
        Ok(self.angle_between(&ta, &tb))
    }

    /// Angle between two unit tangents at the same point.
    pub fn angle_between(&self, u: &Vec3, v: &Vec3) -> f64 {
        let d = u - v;
        let s = u + v;
        let dn = self.form(&d, &d).max(0.0).sqrt();
        let sn = self.form(&s, &s).max(0.0).sqrt();
        2.0 * dn.atan2(sn)
    }

    /// Unit tangent of `g` at one of its points `p`.
    pub fn tangent_at_point(&self, g: &Geodesic, p: &Point) -> Vec3 {
        let n = self.normal(g);
        if self.curvature == 0.0 {
            return g.dir;
        }
        // t = n x p rotated into the tangent plane, oriented like g.dir.
        let t = self.raise(n.cross(&p.0));
        let t = t / self.form(&t, &t).sqrt();
        let at_base = self.raise(n.cross(&g.base.0));
        if self.form(&at_base, &g.dir) < 0.0 {
            -t
        } else {
            t
        }
    }

    /// Angle in `[0, pi/2]` between the traces of two geodesics, from their
    /// normals.
    pub fn crossing_angle(&self, g1: &Geodesic, g2: &Geodesic) -> f64 {
        let c = self.form(&self.normal(g1), &self.normal(g2)).abs().min(1.0);
        c.acos()
    }

    pub fn intersect(&self, g1: &Geodesic, g2: &Geodesic) -> IntersectionSet {
        if self.curvature == 0.0 {
            return self.intersect_flat(g1, g2);
        }
        let n1 = self.normal(g1);
        let n2 = self.normal(g2);
        let c = n1.cross(&n2);
        if c.norm() <= self.eps * n1.norm() * n2.norm() {
            let on = self.signed_distance(&g2.base, g1).abs() <= self.eps;
            return if on {
                IntersectionSet::coincident()
            } else {
                IntersectionSet::empty()
            };
        }
        let v = self.raise(c);
        if self.curvature > 0.0 {
            let p = v * (self.model_radius() / v.norm());
            return IntersectionSet {
                kind: IntersectionKind::Two,
                points: vec![Point(p), Point(-p)],
            };
        }
        let q = self.form(&v, &v);
        if q < -self.eps * v.norm_squared() {
            match self.project(v) {
                Ok(p) => IntersectionSet {
                    kind: IntersectionKind::One,
                    points: vec![p],
                },
                Err(_) => IntersectionSet::empty(),
            }
        } else {
            IntersectionSet::empty()
        }
    }

    fn intersect_flat(&self, g1: &Geodesic, g2: &Geodesic) -> IntersectionSet {
        let (p1, d1) = (g1.base.0, g1.dir);
        let (p2, d2) = (g2.base.0, g2.dir);
        let cross = d1.x * d2.y - d1.y * d2.x;
        if cross.abs() <= self.eps {
            let on = self.signed_distance(&g2.base, g1).abs() <= self.eps;
            return if on {
                IntersectionSet::coincident()
            } else {
                IntersectionSet::empty()
            };
        }
        let w = p2 - p1;
        let t = (w.x * d2.y - w.y * d2.x) / cross;
        IntersectionSet {
            kind: IntersectionKind::One,
            points: vec![Point(Vec3::new(p1.x + t * d1.x, p1.y + t * d1.y, 1.0))],
        }
    }

    /// Common perpendicular of two disjoint geodesics: ultraparallel ones
    /// when `K < 0`, parallel ones when `K = 0`.
    pub fn common_perpendicular(&self, g1: &Geodesic, g2: &Geodesic) -> Result<CommonPerpendicular> {
        let meeting = self.intersect(g1, g2);
        if !meeting.is_empty() {
            return Err(Error::WrongConfiguration(
                "geodesics meet; no common perpendicular".into(),
            ));
        }
        if self.curvature == 0.0 {
            let (foot, length) = self.perpendicular_foot(&g1.base, g2)?;
            return Ok(CommonPerpendicular {
                foot_on_first: g1.base,
                foot_on_second: foot,
                length,
            });
        }
        let n1 = self.normal(g1);
        let n2 = self.normal(g2);
        let v = self.raise(n1.cross(&n2));
        let q = self.form(&v, &v);
        if q <= self.eps * v.norm_squared() {
            return Err(Error::WrongConfiguration(
                "asymptotic geodesics have no common perpendicular".into(),
            ));
        }
        let m = v / q.sqrt();
        let f1 = self.project(self.raise(n1.cross(&m)))?;
        let f2 = self.project(self.raise(n2.cross(&m)))?;
        Ok(CommonPerpendicular {
            foot_on_first: f1,
            foot_on_second: f2,
            length: self.distance(&f1, &f2),
        })
    }

    /// Reflection across the trace of `g`.
    pub fn reflect(&self, p: &Point, g: &Geodesic) -> Point {
        let n = self.normal(g);
        let off = self.offset(p, g, &n);
        self.project(p.0 - n * (2.0 * off)).unwrap_or(*p)
    }

    /// Reflection of a whole geodesic across `g`.
    pub fn reflect_geodesic(&self, h: &Geodesic, g: &Geodesic) -> Geodesic {
        let base = self.reflect(&h.base, g);
        let n = self.normal(g);
        let dir = h.dir - n * (2.0 * self.form(&h.dir, &n));
        self.geodesic(base, dir).unwrap_or(Geodesic { base, dir })
    }

    /// Midpoint of the segment `pq`.
    pub fn midpoint(&self, p: &Point, q: &Point) -> Result<Point> {
        let g = self.geodesic_through(p, q)?;
        Ok(self.point_at(&g, self.distance(p, q) / 2.0))
    }

    /// The geodesic through `vertex` making angle `theta` (counter-clockwise)
    /// with the direction of `g` at `vertex`. `vertex` must lie on `g`.
    pub fn rotate_direction(&self, g: &Geodesic, vertex: &Point, theta: f64) -> Geodesic {
        let t = self.tangent_at_point(g, vertex);
        let n = self.normal(g);
        let dir = t * theta.cos() + n * theta.sin();
        self.geodesic(*vertex, dir)
            .unwrap_or(Geodesic { base: *vertex, dir })
    }

    /// Whether `p` lies on the trace of `g` within tolerance.
    pub fn lies_on(&self, p: &Point, g: &Geodesic) -> bool {
        self.signed_distance(p, g).abs() <= self.eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn planes() -> [CurvedPlane; 3] {
        [-1.0, 0.0, 1.0].map(|k| CurvedPlane::with_curvature(k).unwrap())
    }

    #[test]
    fn make_plane_rejects_bad_parameters() {
        assert!(CurvedPlane::new(f64::NAN, 1e-9).is_err());
        assert!(CurvedPlane::new(f64::INFINITY, 1e-9).is_err());
        assert!(CurvedPlane::new(1.0, 0.0).is_err());
        assert!(CurvedPlane::new(1.0, -1e-9).is_err());
        assert!(CurvedPlane::new(-1.0, 1e-9).is_ok());
    }

    #[test]
    fn distance_examples() {
        for plane in planes() {
            let p = plane.polar(0.7, 0.3);
            assert_eq!(plane.distance(&p, &p), 0.0);
        }
        let s = CurvedPlane::with_curvature(1.0).unwrap();
        let north = s.origin();
        let equator = s.point([1.0, 0.0, 0.0]).unwrap();
        assert!((s.distance(&north, &equator) - FRAC_PI_2).abs() < 1e-15);
        let south = s.point([0.0, 0.0, -1.0]).unwrap();
        assert_eq!(s.distance(&north, &south), PI);

        let h = CurvedPlane::with_curvature(-1.0).unwrap();
        let g = h.ray_from_origin(1.1);
        let q = h.point_at(&g, 1.0);
        assert!((h.distance(&h.origin(), &q) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn geodesic_through_examples() {
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        let g = e
            .geodesic_through(&e.origin(), &e.point([1.0, 0.0, 1.0]).unwrap())
            .unwrap();
        assert_eq!(g.dir(), &Vec3::new(1.0, 0.0, 0.0));

        let s = CurvedPlane::with_curvature(1.0).unwrap();
        let south = s.point([0.0, 0.0, -1.0]).unwrap();
        assert_eq!(
            s.geodesic_through(&s.origin(), &south),
            Err(Error::NonUniqueGeodesic)
        );
        assert!(matches!(
            s.geodesic_through(&south, &south),
            Err(Error::DegenerateInput(_))
        ));

        let h = CurvedPlane::with_curvature(-1.0).unwrap();
        let p = h.polar(0.4, 2.0);
        let q = h.polar(1.3, -0.5);
        let g = h.geodesic_through(&p, &q).unwrap();
        let back = h.point_at(&g, h.distance(&p, &q));
        assert!(h.distance(&back, &q) < 1e-9);
    }

    #[test]
    fn point_at_examples() {
        for plane in planes() {
            let g = plane.ray_from_origin(0.2);
            assert_eq!(plane.point_at(&g, 0.0), g.base());
        }
        let s = CurvedPlane::with_curvature(1.0).unwrap();
        let g = s.ray_from_origin(0.0);
        assert!(s.distance(&s.point_at(&g, 2.0 * PI), &g.base()) < 1e-12);
        let h = CurvedPlane::with_curvature(-1.0).unwrap();
        let g = h.geodesic_through(&h.polar(0.3, 0.1), &h.polar(0.9, 2.1)).unwrap();
        assert!((h.distance(&h.point_at(&g, 2.5), &g.base()) - 2.5).abs() < 1e-12);
    }

    #[test]
    fn point_rejects_off_surface() {
        let s = CurvedPlane::with_curvature(1.0).unwrap();
        assert!(s.point([0.0, 0.0, 2.0]).is_err());
        let h = CurvedPlane::with_curvature(-1.0).unwrap();
        assert!(h.point([0.0, 0.0, -1.0]).is_err());
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        assert!(e.point([0.0, 0.0, 0.5]).is_err());
        assert!(e.point([3.0, 4.0, 1.0]).is_ok());
    }

    #[test]
    fn angle_at_examples() {
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        let a = e.origin();
        let b = e.point([1.0, 0.0, 1.0]).unwrap();
        let c = e.point([0.5, 3f64.sqrt() / 2.0, 1.0]).unwrap();
        for (v, p, q) in [(a, b, c), (b, c, a), (c, a, b)] {
            assert!((e.angle_at(&v, &p, &q).unwrap() - PI / 3.0).abs() < 1e-12);
        }
        let s = CurvedPlane::with_curvature(1.0).unwrap();
        let x = s.point([1.0, 0.0, 0.0]).unwrap();
        let y = s.point([0.0, 1.0, 0.0]).unwrap();
        assert!((s.angle_at(&s.origin(), &x, &y).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!(matches!(
            s.angle_at(&x, &x, &y),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn perpendicular_foot_examples() {
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        let axis = e.ray_from_origin(0.0);
        let (foot, d) = e
            .perpendicular_foot(&e.point([0.0, 1.0, 1.0]).unwrap(), &axis)
            .unwrap();
        assert_eq!(foot, e.origin());
        assert_eq!(d, 1.0);

        let s = CurvedPlane::with_curvature(1.0).unwrap();
        let equator = s
            .geodesic(s.point([1.0, 0.0, 0.0]).unwrap(), Vec3::new(0.0, 1.0, 0.0))
            .unwrap();
        let p = s.polar(PI / 4.0, 0.0);
        let (foot, d) = s.perpendicular_foot(&p, &equator).unwrap();
        assert!((d - PI / 4.0).abs() < 1e-15);
        assert!(s.lies_on(&foot, &equator));
        assert_eq!(
            s.perpendicular_foot(&s.origin(), &equator),
            Err(Error::NonUniqueFoot)
        );

        for plane in planes() {
            let g = plane.ray_from_origin(0.4);
            let p = plane.point_at(&g, 0.8);
            let (foot, d) = plane.perpendicular_foot(&p, &g).unwrap();
            assert!(d < 1e-12);
            assert!(plane.distance(&foot, &p) < 1e-12);
        }
    }

    #[test]
    fn perpendicular_at_meets_at_right_angle() {
        for plane in planes() {
            let g = plane.geodesic_through(&plane.polar(0.2, 0.3), &plane.polar(0.7, 1.9)).unwrap();
            let p = plane.perpendicular_at(&g, 0.35);
            assert!((plane.crossing_angle(&g, &p) - FRAC_PI_2).abs() < 1e-12);
            assert!(plane.lies_on(&p.base(), &g));
        }
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        let y = e.perpendicular_at(&e.ray_from_origin(0.0), 0.0);
        assert_eq!(y.dir(), &Vec3::new(0.0, 1.0, 0.0));
    }

    #[test]
    fn intersect_examples() {
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        let x = e.ray_from_origin(0.0);
        let y = e.ray_from_origin(FRAC_PI_2);
        let hit = e.intersect(&x, &y);
        assert_eq!(hit.kind, IntersectionKind::One);
        assert!(e.distance(&hit.points[0], &e.origin()) < 1e-15);
        assert_eq!(e.intersect(&x, &x).kind, IntersectionKind::Coincident);

        let s = CurvedPlane::with_curvature(1.0).unwrap();
        let hit = s.intersect(&s.ray_from_origin(0.0), &s.ray_from_origin(1.0));
        assert_eq!(hit.kind, IntersectionKind::Two);
        assert!((s.distance(&hit.points[0], &hit.points[1]) - PI).abs() < 1e-12);

        let h = CurvedPlane::with_curvature(-1.0).unwrap();
        let base = h.ray_from_origin(0.0);
        let left = h.perpendicular_at(&base, -1.0);
        let right = h.perpendicular_at(&base, 1.0);
        assert!(h.intersect(&left, &right).is_empty());
    }

    #[test]
    fn reflect_examples() {
        let e = CurvedPlane::with_curvature(0.0).unwrap();
        let x = e.ray_from_origin(0.0);
        let p = e.point([0.0, 1.0, 1.0]).unwrap();
        assert_eq!(e.reflect(&p, &x), e.point([0.0, -1.0, 1.0]).unwrap());
        for plane in planes() {
            let g = plane.ray_from_origin(0.7);
            let on = plane.point_at(&g, 0.5);
            assert!(plane.distance(&plane.reflect(&on, &g), &on) < 1e-12);
        }
    }

    #[test]
    fn common_perpendicular_of_ultraparallels() {
        let h = CurvedPlane::with_curvature(-1.0).unwrap();
        let base = h.ray_from_origin(0.0);
        let up = h.perpendicular_at(&base, 0.0);
        let other = h.perpendicular_at(&up, 0.5);
        let cp = h.common_perpendicular(&base, &other).unwrap();
        assert!((cp.length - 0.5).abs() < 1e-12);
        assert!(h.distance(&cp.foot_on_first, &h.origin()) < 1e-12);
        assert!(h.common_perpendicular(&base, &up).is_err());
    }
}
