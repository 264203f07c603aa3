//! Constructive falsifiers for historical "proofs" of the parallel postulate.
//!
//! Each falsifier builds a concrete hyperbolic configuration on which the
//! assumption smuggled into the proof fails, and certifies the failure with a
//! positive margin. Disjointness of two lines is always certified by their
//! common perpendicular, never by a missing numerical root. Every witness
//! stores its configuration, and [`replay`] recomputes the margin from it.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::figures::{build_triangle, Triangle};
use crate::plane::{CurvedPlane, Geodesic, Point, DEFAULT_EPS};
use crate::trig;

/// Ids accepted by [`generate`].
pub const IDS: &[&str] = &[
    "aaa",
    "angle-interior",
    "circumcircle",
    "equidistant",
    "khayyam",
    "playfair",
    "simson",
    "wallis",
];

/// Resolution of threshold searches.
const RESOLUTION: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub id: String,
    pub curvature: f64,
    pub configuration: Value,
    pub claim_violated: String,
    /// Positive quantity certifying the violation.
    pub margin: f64,
    /// Quantities found along the way (thresholds, profiles); not replayed.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub evidence: Value,
}

fn witness<C: Serialize>(
    id: &str,
    plane: &CurvedPlane,
    config: &C,
    claim: &str,
    margin: f64,
    evidence: Value,
) -> Result<Witness> {
    if !(margin > 0.0) {
        return Err(Error::WrongConfiguration(format!(
            "{id}: non-positive margin {margin}"
        )));
    }
    Ok(Witness {
        id: id.to_string(),
        curvature: plane.curvature(),
        configuration: serde_json::to_value(config).map_err(|e| Error::Replay(e.to_string()))?,
        claim_violated: claim.to_string(),
        margin,
        evidence,
    })
}

fn require_hyperbolic(plane: &CurvedPlane, searched_to: f64) -> Result<()> {
    if plane.curvature() < 0.0 {
        Ok(())
    } else {
        Err(Error::NoCounterexample { searched_to })
    }
}

/// Length of the common perpendicular of two lines that do not meet.
fn separation(plane: &CurvedPlane, g: &Geodesic, h: &Geodesic) -> Result<f64> {
    if !plane.intersect(g, h).is_empty() {
        return Err(Error::WrongConfiguration("the lines meet".into()));
    }
    let gap = plane.common_perpendicular(g, h)?.length;
    if gap > 0.0 {
        Ok(gap)
    } else {
        Err(Error::WrongConfiguration("the lines are asymptotic".into()))
    }
}

/// Smallest `x` in `(lo, hi]` with `fails(x)`, given `!fails(lo)` and
/// `fails(hi)`.
fn bisect(mut lo: f64, mut hi: f64, fails: impl Fn(f64) -> bool) -> f64 {
    while hi - lo > RESOLUTION * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if fails(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

// ---------------------------------------------------------------- AAA

/// The triangle with the given angles; unique up to isometry when `K != 0`.
///
/// Sides come from the dual law of cosines
/// `cos_k(a) = (cos alpha + cos beta cos gamma) / (sin beta sin gamma)`,
/// read as `cosh` for `K < 0` and `cos` for `K > 0`.
pub fn aaa_rigidity(plane: &CurvedPlane, alpha: f64, beta: f64, gamma: f64) -> Result<Triangle> {
    let k = plane.curvature();
    if k == 0.0 {
        return Err(Error::WrongGeometry {
            required: "K != 0",
            curvature: k,
        });
    }
    let angles = [alpha, beta, gamma];
    let infeasible = Error::InfeasibleAngles(alpha, beta, gamma);
    if angles.iter().any(|&x| !(x > 0.0 && x < PI)) {
        return Err(infeasible);
    }
    let sum = alpha + beta + gamma;
    if (k < 0.0 && sum >= PI) || (k > 0.0 && sum <= PI) {
        return Err(infeasible);
    }
    let side = |a: f64, b: f64, c: f64| -> Result<f64> {
        let x = (a.cos() + b.cos() * c.cos()) / (b.sin() * c.sin());
        let s = if k < 0.0 {
            if x < 1.0 {
                return Err(infeasible.clone());
            }
            x.acosh()
        } else {
            if !(x > -1.0 && x < 1.0) {
                return Err(infeasible.clone());
            }
            x.acos()
        };
        Ok(s / plane.kappa())
    };
    let b = side(beta, gamma, alpha)?;
    let c = side(gamma, alpha, beta)?;
    if k > 0.0 && b.max(c) >= plane.hemisphere_cap() {
        return Err(infeasible);
    }
    let p = plane.origin();
    build_triangle(plane, &p, &plane.polar(c, 0.0), &plane.polar(b, alpha))
}

/// A copy of `t` with every side multiplied by `factor`.
pub fn similar_copy(plane: &CurvedPlane, t: &Triangle, factor: f64) -> Result<Triangle> {
    if !(factor.is_finite() && factor > 0.0) {
        return Err(Error::InvalidParameter(format!("factor must be positive, got {factor}")));
    }
    if !plane.is_flat() && (factor - 1.0).abs() > plane.eps() {
        return Err(Error::NoSimilarTriangles);
    }
    let [a, b, c] = t.sides.map(|s| s * factor);
    let alpha = trig::angle_from_sides(plane, b, c, a)?;
    let p = plane.origin();
    build_triangle(plane, &p, &plane.polar(c, 0.0), &plane.polar(b, alpha))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AaaConfig {
    pub angles: [f64; 3],
    pub factor: f64,
}

/// Scaling a triangle changes its angles: margin is the change of the angle
/// sum when the sides are multiplied by `factor`.
fn certify_aaa(plane: &CurvedPlane, c: &AaaConfig) -> Result<f64> {
    let [alpha, beta, gamma] = c.angles;
    let t = aaa_rigidity(plane, alpha, beta, gamma)?;
    let [a, b, cc] = t.sides.map(|s| s * c.factor);
    let scaled_alpha = trig::angle_from_sides(plane, b, cc, a)?;
    let p = plane.origin();
    let copy = build_triangle(plane, &p, &plane.polar(cc, 0.0), &plane.polar(b, scaled_alpha))?;
    Ok((copy.angle_sum - t.angle_sum).abs())
}

pub fn aaa_witness(plane: &CurvedPlane, angles: [f64; 3], factor: f64) -> Result<Witness> {
    require_hyperbolic(plane, factor)?;
    let config = AaaConfig { angles, factor };
    let margin = certify_aaa(plane, &config)?;
    witness(
        "aaa",
        plane,
        &config,
        "a triangle has a similar copy of any size (Wallis)",
        margin,
        Value::Null,
    )
}

// ---------------------------------------------------------------- Wallis

#[derive(Debug, Serialize, Deserialize)]
pub struct WallisConfig {
    /// Angle of `l1` with `l3` at `A`.
    pub a: f64,
    /// Angle of the transported line with `l3` at `B`, on the same side.
    pub b: f64,
    /// Initial distance `AB`, at which the lines meet.
    pub start: f64,
    /// Distance `AB` at which the transported line misses `l1`.
    pub position: f64,
}

/// `l3` (the x-axis), `l1` through `A` and the transported line through
/// the point of `l3` at distance `u` from `A`.
pub fn wallis_lines(plane: &CurvedPlane, a: f64, b: f64, u: f64) -> Result<[Geodesic; 3]> {
    let l3 = plane.ray_from_origin(0.0);
    let origin = plane.origin();
    let l1 = plane.rotate_direction(&l3, &origin, a);
    let foot = plane.polar(u, 0.0);
    let back = plane.geodesic_through(&foot, &origin)?;
    let l4 = plane.rotate_direction(&back, &foot, -b);
    Ok([l3, l1, l4])
}

fn wallis_meets(plane: &CurvedPlane, a: f64, b: f64, u: f64) -> Result<bool> {
    let [_, l1, l4] = wallis_lines(plane, a, b, u)?;
    Ok(!plane.intersect(&l1, &l4).is_empty())
}

fn certify_wallis(plane: &CurvedPlane, c: &WallisConfig) -> Result<(f64, f64, f64)> {
    if !wallis_meets(plane, c.a, c.b, c.start)? {
        return Err(Error::WrongConfiguration("the lines miss at the start".into()));
    }
    let [_, l1, l4] = wallis_lines(plane, c.a, c.b, c.position)?;
    let gap = separation(plane, &l1, &l4)?;
    let threshold = bisect(c.start, c.position, |u| {
        !wallis_meets(plane, c.a, c.b, u).unwrap_or(true)
    });
    Ok((c.position - threshold, threshold, gap))
}

/// Transports the line through `B` along `l3` at a constant angle, away
/// from `A`, until it no longer meets `l1`.
pub fn wallis_motion_trace(plane: &CurvedPlane, a: f64, b: f64, start: f64) -> Result<Witness> {
    if !(a > 0.0 && b > 0.0 && a + b < PI) {
        return Err(Error::InvalidParameter(format!(
            "angles must be positive with a + b < pi, got {a}, {b}"
        )));
    }
    if !(start > 0.0 && start.is_finite()) {
        return Err(Error::InvalidParameter(format!("start must be positive, got {start}")));
    }
    let far = if plane.curvature() > 0.0 {
        plane.antipodal_distance()
    } else {
        start * 2f64.powi(40)
    };
    let mut u = start;
    while u <= far {
        if plane.curvature() < 0.0 && !wallis_meets(plane, a, b, u)? {
            let config = WallisConfig {
                a,
                b,
                start,
                position: u,
            };
            let (margin, threshold, gap) = certify_wallis(plane, &config)?;
            return witness(
                "wallis",
                plane,
                &config,
                "a line moved along l3 at a constant angle keeps meeting l1",
                margin,
                serde_json::json!({ "threshold": threshold, "gap": gap }),
            );
        }
        u *= 2.0;
    }
    Err(Error::NoCounterexample { searched_to: far })
}

// ---------------------------------------------------------------- Khayyam

#[derive(Debug, Serialize, Deserialize)]
pub struct KhayyamConfig {
    pub base: f64,
    pub legs: f64,
}

/// Lines of Khayyam's figure: `AC`, `BD` and `HKI`.
pub struct KhayyamFigure {
    pub points: [(char, Point); 6],
    pub ac: Geodesic,
    pub bd: Geodesic,
    pub hki: Geodesic,
}

/// `ABDC` with right angles at `A`, `B`; `E` the midpoint of `AB`, `G` where
/// the perpendicular bisector meets `CD`, `GK = EG` and `HKI` perpendicular
/// to `EK` at `K`.
pub fn khayyam_figure(plane: &CurvedPlane, base: f64, legs: f64) -> Result<KhayyamFigure> {
    if !(base > 0.0 && legs > 0.0) {
        return Err(Error::InvalidParameter("lengths must be positive".into()));
    }
    if plane.curvature() > 0.0 && base.max(legs) >= plane.hemisphere_cap() {
        return Err(Error::InvalidParameter("figure leaves the hemisphere".into()));
    }
    let ab = plane.ray_from_origin(0.0);
    let ac = plane.perpendicular_at(&ab, -base / 2.0);
    let bd = plane.perpendicular_at(&ab, base / 2.0);
    let c = plane.point_at(&ac, legs);
    let d = plane.point_at(&bd, legs);
    let e = plane.origin();
    let axis = plane.perpendicular_at(&ab, 0.0);
    let g = plane
        .intersect(&axis, &plane.geodesic_through(&c, &d)?)
        .nearest_to(plane, &e)
        .ok_or_else(|| Error::WrongConfiguration("axis misses CD".into()))?;
    let eg = plane.distance(&e, &g);
    let k = plane.point_at(&axis, 2.0 * eg);
    let hki = plane.perpendicular_at(&axis, 2.0 * eg);
    Ok(KhayyamFigure {
        points: [
            ('A', plane.point_at(&ab, -base / 2.0)),
            ('B', plane.point_at(&ab, base / 2.0)),
            ('C', c),
            ('D', d),
            ('E', e),
            ('K', k),
        ],
        ac,
        bd,
        hki,
    })
}

fn certify_khayyam(plane: &CurvedPlane, c: &KhayyamConfig) -> Result<f64> {
    let f = khayyam_figure(plane, c.base, c.legs)?;
    Ok(separation(plane, &f.ac, &f.hki)?.min(separation(plane, &f.bd, &f.hki)?))
}

/// Certifies that `AC` and `BD` miss `HKI`, doubling the legs until they do.
pub fn khayyam_gap(plane: &CurvedPlane, base: f64, legs: f64) -> Result<Witness> {
    let misses = |l: f64| certify_khayyam(plane, &KhayyamConfig { base, legs: l }).is_ok();
    let mut l = legs;
    let mut tried = legs;
    for _ in 0..40 {
        if plane.curvature() > 0.0 && l >= plane.hemisphere_cap() {
            break;
        }
        tried = l;
        khayyam_figure(plane, base, l)?;
        if misses(l) {
            require_hyperbolic(plane, l)?;
            let config = KhayyamConfig { base, legs: l };
            let margin = certify_khayyam(plane, &config)?;
            let threshold = if misses(legs / 64.0) {
                None
            } else {
                Some(bisect(legs / 64.0, l, misses))
            };
            return witness(
                "khayyam",
                plane,
                &config,
                "the extensions of AC and BD meet the perpendicular HKI",
                margin,
                serde_json::json!({ "threshold_legs": threshold }),
            );
        }
        l *= 2.0;
    }
    Err(Error::NoCounterexample { searched_to: tried })
}

// ---------------------------------------------------------------- equidistant

#[derive(Debug, Serialize, Deserialize)]
pub struct EquidistantConfig {
    pub g: Geodesic,
    pub d: f64,
    pub half_span: f64,
}

fn default_half_span(plane: &CurvedPlane) -> f64 {
    if plane.curvature() > 0.0 {
        1f64.min(PI / (4.0 * plane.kappa()))
    } else {
        1.0
    }
}

/// Points at distance `d` on the left of `g`, above `point_at(g, s)`.
fn equidistant_point(plane: &CurvedPlane, g: &Geodesic, d: f64, s: f64) -> Point {
    plane.point_at(&plane.perpendicular_at(g, s), d)
}

fn certify_equidistant(plane: &CurvedPlane, c: &EquidistantConfig) -> Result<f64> {
    if !(c.d > 0.0) {
        return Err(Error::InvalidParameter(format!("distance must be positive, got {}", c.d)));
    }
    if plane.curvature() > 0.0 && c.d >= plane.hemisphere_cap() {
        return Err(Error::InvalidParameter(format!(
            "distance {} reaches the pole",
            c.d
        )));
    }
    let left = equidistant_point(plane, &c.g, c.d, -c.half_span);
    let mid = equidistant_point(plane, &c.g, c.d, 0.0);
    let right = equidistant_point(plane, &c.g, c.d, c.half_span);
    let chord = plane.geodesic_through(&left, &right)?;
    Ok(plane.signed_distance(&mid, &chord).abs())
}

/// Distance from the middle of three points of the equidistant curve at
/// distance `d` from `g` to the geodesic through the outer two.
pub fn equidistant_locus_deviation(plane: &CurvedPlane, g: &Geodesic, d: f64) -> Result<f64> {
    certify_equidistant(
        plane,
        &EquidistantConfig {
            g: *g,
            d,
            half_span: default_half_span(plane),
        },
    )
}

pub fn equidistant_witness(plane: &CurvedPlane, g: &Geodesic, d: f64) -> Result<Witness> {
    let config = EquidistantConfig {
        g: *g,
        d,
        half_span: default_half_span(plane),
    };
    let margin = certify_equidistant(plane, &config)?;
    require_hyperbolic(plane, d)?;
    witness(
        "equidistant",
        plane,
        &config,
        "the points at a fixed distance from a line form a line (Clavius, Ibn Qurra)",
        margin,
        Value::Null,
    )
}

// ---------------------------------------------------------------- Playfair

/// Offset beyond the angle of parallelism of the two non-meeting lines.
const PLAYFAIR_DELTA: f64 = 2.5e-7;

#[derive(Debug, Serialize, Deserialize)]
pub struct PlayfairConfig {
    pub g: Geodesic,
    pub a: Point,
    pub delta: f64,
}

pub fn playfair_lines(plane: &CurvedPlane, g: &Geodesic, a: &Point, delta: f64) -> Result<(Geodesic, Geodesic)> {
    let (foot, p) = plane.perpendicular_foot(a, g)?;
    if p <= plane.eps() {
        return Err(Error::DegenerateInput("A lies on g".into()));
    }
    let theta = trig::angle_of_parallelism(plane, p)? + delta;
    let down = plane.geodesic_through(a, &foot)?;
    Ok((
        plane.rotate_direction(&down, a, theta),
        plane.rotate_direction(&down, a, -theta),
    ))
}

fn certify_playfair(plane: &CurvedPlane, c: &PlayfairConfig) -> Result<f64> {
    let (l1, l2) = playfair_lines(plane, &c.g, &c.a, c.delta)?;
    separation(plane, &l1, &c.g)?;
    separation(plane, &l2, &c.g)?;
    // Supplement of the angle the two lines enclose around AF.
    Ok(PI - plane.angle_between(l1.dir(), l2.dir()))
}

/// Two distinct lines through `a` that both miss `g`.
pub fn playfair_multiplicity(plane: &CurvedPlane, g: &Geodesic, a: &Point) -> Result<(Geodesic, Geodesic)> {
    if plane.curvature() >= 0.0 {
        return Err(Error::NoMultiplicity);
    }
    let config = PlayfairConfig {
        g: *g,
        a: *a,
        delta: PLAYFAIR_DELTA,
    };
    certify_playfair(plane, &config)?;
    playfair_lines(plane, g, a, PLAYFAIR_DELTA)
}

pub fn playfair_witness(plane: &CurvedPlane, g: &Geodesic, a: &Point) -> Result<Witness> {
    if plane.curvature() >= 0.0 {
        return Err(Error::NoCounterexample { searched_to: 0.0 });
    }
    let config = PlayfairConfig {
        g: *g,
        a: *a,
        delta: PLAYFAIR_DELTA,
    };
    let margin = certify_playfair(plane, &config)?;
    witness(
        "playfair",
        plane,
        &config,
        "through a point off a line passes at most one line disjoint from it (Playfair)",
        margin,
        Value::Null,
    )
}

// ---------------------------------------------------------------- Simson

#[derive(Debug, Serialize, Deserialize)]
pub struct SimsonConfig {
    pub g1: Geodesic,
    pub g2: Geodesic,
    /// Sample positions along `g1`, measured from the foot of the common
    /// perpendicular.
    pub offsets: Vec<f64>,
}

/// Distances from points of `g1` to `g2`, sampled at `offsets` from the
/// foot of their common perpendicular.
pub fn distance_profile(plane: &CurvedPlane, g1: &Geodesic, g2: &Geodesic, offsets: &[f64]) -> Result<Vec<f64>> {
    let cp = plane.common_perpendicular(g1, g2)?;
    let along = plane.geodesic(cp.foot_on_first, plane.tangent_at_point(g1, &cp.foot_on_first))?;
    Ok(offsets
        .iter()
        .map(|&s| plane.signed_distance(&plane.point_at(&along, s), g2).abs())
        .collect())
}

fn certify_simson(plane: &CurvedPlane, c: &SimsonConfig) -> Result<f64> {
    let gap = separation(plane, &c.g1, &c.g2)
        .map_err(|_| Error::WrongConfiguration("lines are not ultraparallel".into()))?;
    let mut offsets = c.offsets.clone();
    offsets.sort_by(f64::total_cmp);
    let profile = distance_profile(plane, &c.g1, &c.g2, &offsets)?;
    for (w, s) in profile.windows(2).zip(offsets.windows(2)) {
        let falling = s[1] <= 0.0;
        if falling && !(w[1] < w[0]) || !falling && !(w[1] > w[0]) {
            return Err(Error::WrongConfiguration("distance profile is not V-shaped".into()));
        }
    }
    Ok(profile.iter().copied().fold(gap, f64::min))
}

/// The distance from `g1` to `g2` falls to the common perpendicular and
/// rises again, without the lines meeting.
pub fn simson_profile(plane: &CurvedPlane, g1: &Geodesic, g2: &Geodesic) -> Result<Witness> {
    let offsets: Vec<f64> = (-4..=4).map(|i| f64::from(i) * 0.5).collect();
    let config = SimsonConfig {
        g1: *g1,
        g2: *g2,
        offsets,
    };
    let margin = certify_simson(plane, &config)?;
    let profile = distance_profile(plane, g1, g2, &config.offsets)?;
    witness(
        "simson",
        plane,
        &config,
        "a line cannot approach another line and then move away without meeting it (Simson)",
        margin,
        serde_json::json!({ "profile": profile }),
    )
}

// ---------------------------------------------------------------- circumcircle

#[derive(Debug, Serialize, Deserialize)]
pub struct CircumcircleConfig {
    pub points: [Point; 3],
}

pub fn perpendicular_bisector(plane: &CurvedPlane, p: &Point, q: &Point) -> Result<Geodesic> {
    let g = plane.geodesic_through(p, q)?;
    Ok(plane.perpendicular_at(&g, plane.distance(p, q) / 2.0))
}

/// The point equidistant from three points, where it exists.
pub fn circumcenter(plane: &CurvedPlane, p: &Point, q: &Point, r: &Point) -> Result<Point> {
    let b1 = perpendicular_bisector(plane, p, q)?;
    let b2 = perpendicular_bisector(plane, q, r)?;
    plane
        .intersect(&b1, &b2)
        .nearest_to(plane, p)
        .ok_or(Error::NoCircumcenter)
}

fn certify_circumcircle(plane: &CurvedPlane, c: &CircumcircleConfig) -> Result<f64> {
    let [p, q, r] = &c.points;
    if plane.geodesic_through(p, r).map(|g| plane.lies_on(q, &g))? {
        return Err(Error::DegenerateInput("points are collinear".into()));
    }
    let b = [
        perpendicular_bisector(plane, p, q)?,
        perpendicular_bisector(plane, q, r)?,
        perpendicular_bisector(plane, r, p)?,
    ];
    Ok(separation(plane, &b[0], &b[1])?
        .min(separation(plane, &b[1], &b[2])?)
        .min(separation(plane, &b[2], &b[0])?))
}

/// Three non-collinear points with no circle through them: a nearly flat
/// triple, spread out until the perpendicular bisectors separate.
pub fn circumcircle_failure(plane: &CurvedPlane) -> Result<Witness> {
    const SAG: f64 = 0.01;
    let mut diameter = 5.0;
    for _ in 0..8 {
        let config = CircumcircleConfig {
            points: [
                plane.polar(diameter / 2.0, PI),
                plane.polar(SAG, FRAC_PI_2),
                plane.polar(diameter / 2.0, 0.0),
            ],
        };
        if plane.curvature() < 0.0 {
            if let Ok(margin) = certify_circumcircle(plane, &config) {
                return witness(
                    "circumcircle",
                    plane,
                    &config,
                    "three points not on a line always lie on a circle (W. Bolyai)",
                    margin,
                    serde_json::json!({ "diameter": diameter }),
                );
            }
        } else {
            let [p, q, r] = &config.points;
            circumcenter(plane, p, q, r)?;
            return Err(Error::NoCounterexample { searched_to: diameter });
        }
        diameter *= 2.0;
    }
    Err(Error::NoCounterexample { searched_to: diameter })
}

// ---------------------------------------------------------------- angle interior

#[derive(Debug, Serialize, Deserialize)]
pub struct AngleInteriorConfig {
    /// Opening of the angle at the vertex.
    pub omega: f64,
    /// Distance of `P` from the vertex along the bisector.
    pub p: f64,
}

/// The two sides of the angle and the line through `P` perpendicular to
/// the bisector.
pub fn angle_interior_lines(plane: &CurvedPlane, omega: f64, p: f64) -> [Geodesic; 3] {
    let bisector = plane.ray_from_origin(0.0);
    [
        plane.ray_from_origin(omega / 2.0),
        plane.ray_from_origin(-omega / 2.0),
        plane.perpendicular_at(&bisector, p),
    ]
}

fn certify_angle_interior(plane: &CurvedPlane, c: &AngleInteriorConfig) -> Result<f64> {
    if !(c.omega > 0.0 && c.omega < PI && c.p > 0.0) {
        return Err(Error::InvalidParameter("need 0 < omega < pi and p > 0".into()));
    }
    let [s1, s2, line] = angle_interior_lines(plane, c.omega, c.p);
    Ok(separation(plane, &line, &s1)?.min(separation(plane, &line, &s2)?))
}

/// Walks `P` outward along the bisector of an angle of opening `omega`
/// until the perpendicular to the bisector at `P` misses both sides.
pub fn angle_interior_miss(plane: &CurvedPlane, omega: f64, start: f64) -> Result<Witness> {
    if !(omega > 0.0 && omega < PI && start > 0.0) {
        return Err(Error::InvalidParameter("need 0 < omega < pi and start > 0".into()));
    }
    let misses = |p: f64| certify_angle_interior(plane, &AngleInteriorConfig { omega, p }).is_ok();
    let far = if plane.curvature() > 0.0 {
        plane.hemisphere_cap()
    } else {
        start * 2f64.powi(40)
    };
    let mut p = start;
    while p <= far {
        if misses(p) {
            let config = AngleInteriorConfig { omega, p };
            let margin = certify_angle_interior(plane, &config)?;
            let threshold = if misses(start) { None } else { Some(bisect(start, p, misses)) };
            return witness(
                "angle-interior",
                plane,
                &config,
                "every line through a point inside an angle meets one of its sides (al-Jawhari, Lorenz)",
                margin,
                serde_json::json!({ "threshold": threshold }),
            );
        }
        p *= 2.0;
    }
    Err(Error::NoCounterexample { searched_to: far })
}

// ---------------------------------------------------------------- registry

/// Builds the witness `id` with its default parameters.
pub fn generate(id: &str, plane: &CurvedPlane) -> Result<Witness> {
    // Natural unit of length: the curvature radius, or 1 when flat.
    let r = if plane.is_flat() { 1.0 } else { 1.0 / plane.kappa() };
    let axis = plane.ray_from_origin(0.0);
    match id {
        "aaa" => aaa_witness(plane, [PI / 6.0; 3], 0.5),
        "angle-interior" => angle_interior_miss(plane, FRAC_PI_2, 0.1 * r),
        "circumcircle" => circumcircle_failure(plane),
        "equidistant" => equidistant_witness(plane, &axis, r.min(default_cap(plane))),
        "khayyam" => khayyam_gap(plane, r, (2.0 * r).min(default_cap(plane))),
        "playfair" => playfair_witness(plane, &axis, &plane.polar(r.min(default_cap(plane)), FRAC_PI_2)),
        "simson" => {
            require_hyperbolic(plane, 0.5 * r)?;
            let g2 = plane.perpendicular_at(&plane.ray_from_origin(-FRAC_PI_2), -0.5 * r);
            simson_profile(plane, &axis, &g2)
        }
        "wallis" => wallis_motion_trace(plane, FRAC_PI_3, FRAC_PI_3, r),
        _ => Err(Error::UnknownCounterexample(id.to_string())),
    }
}

fn default_cap(plane: &CurvedPlane) -> f64 {
    if plane.curvature() > 0.0 {
        0.9 * plane.hemisphere_cap()
    } else {
        f64::INFINITY
    }
}

fn parse<C: DeserializeOwned>(w: &Witness) -> Result<C> {
    serde_json::from_value(w.configuration.clone()).map_err(|e| Error::Replay(e.to_string()))
}

/// Recomputes the margin of a witness from its configuration.
pub fn replay(w: &Witness) -> Result<f64> {
    let plane = CurvedPlane::new(w.curvature, DEFAULT_EPS)?;
    let plane = &plane;
    match w.id.as_str() {
        "aaa" => certify_aaa(plane, &parse(w)?),
        "angle-interior" => certify_angle_interior(plane, &parse(w)?),
        "circumcircle" => certify_circumcircle(plane, &parse(w)?),
        "equidistant" => certify_equidistant(plane, &parse(w)?),
        "khayyam" => certify_khayyam(plane, &parse(w)?),
        "playfair" => certify_playfair(plane, &parse(w)?),
        "simson" => certify_simson(plane, &parse(w)?),
        "wallis" => certify_wallis(plane, &parse(w)?).map(|(m, _, _)| m),
        other => Err(Error::UnknownCounterexample(other.to_string())),
    }
}
