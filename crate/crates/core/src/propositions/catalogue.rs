use std::f64::consts::{FRAC_PI_2, PI};

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::sampling::{self, length, length_cap, retry, uniform, SamplingConfig};
use super::{Check, Expectation, Outcome, Proposition, Regime, Verdict};
use crate::error::{Error, Result};
use crate::figures::{
    area, build_lambert_quad, build_saccheri_quad, build_triangle, equilateral_angle,
    equilateral_from_angle, median_ratio, Triangle,
};
use crate::plane::{CurvedPlane, Geodesic, Point};
use crate::trig;

use Expectation::{Fails, Holds, Probe};

/// Tolerance for claims of equality.
const EQ_TOL: f64 = 1e-9;

const ALL_K: Regime = Regime::new(Some(Holds), Some(Holds), Some(Holds));
const NEG: Regime = Regime::new(Some(Holds), None, None);
const POS: Regime = Regime::new(None, None, Some(Holds));

pub(super) static ALL: &[&dyn Proposition] = &[
    &Lam13,
    &Lam15,
    &Lam16,
    &Lam23,
    &Lam26,
    &Lam2838,
    &Lam41,
    &Lam43,
    &Lam50,
    &Lam52,
    &Lam55,
    &Lam58,
    &Lam62,
    &Lam66,
    &Lam68,
    &Lam69,
    &Lam70,
    &Lam71,
    &Lam72,
    &Lam73,
    &Lam76,
    &Lam80,
    &Lam81,
    &Lam82,
];

fn no_config(what: &str) -> Error {
    Error::DegenerateInput(format!("{what}: construction failed"))
}

fn meet(plane: &CurvedPlane, g: &Geodesic, h: &Geodesic, near: &Point) -> Result<Point> {
    plane
        .intersect(g, h)
        .nearest_to(plane, near)
        .ok_or_else(|| no_config("lines do not meet"))
}

fn point_on_segment(plane: &CurvedPlane, p: &Point, q: &Point, t: f64) -> Result<Point> {
    let g = plane.geodesic_through(p, q)?;
    Ok(plane.point_at(&g, t * plane.distance(p, q)))
}

fn min_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(f64::INFINITY, f64::min)
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

fn sample_triangle(
    plane: &CurvedPlane,
    cfg: &SamplingConfig,
    rng: &mut ChaCha8Rng,
) -> Result<[Point; 3]> {
    sampling::triangle(rng, plane, cfg)
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TriangleConfig {
    pub vertices: [Point; 3],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CevianConfig {
    pub vertices: [Point; 3],
    /// Position of the cevian foot along `BC`, as a fraction.
    pub t: f64,
}

fn sample_cevian(
    plane: &CurvedPlane,
    cfg: &SamplingConfig,
    rng: &mut ChaCha8Rng,
) -> Result<CevianConfig> {
    let vertices = sample_triangle(plane, cfg, rng)?;
    Ok(CevianConfig {
        vertices,
        t: uniform(rng, 0.25, 0.75),
    })
}

fn cevian_split(plane: &CurvedPlane, c: &CevianConfig) -> Result<[Triangle; 3]> {
    let [a, b, cc] = c.vertices;
    let d = point_on_segment(plane, &b, &cc, c.t)?;
    Ok([
        build_triangle(plane, &a, &b, &cc)?,
        build_triangle(plane, &a, &b, &d)?,
        build_triangle(plane, &a, &d, &cc)?,
    ])
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SidesConfig {
    pub a: f64,
    pub b: f64,
}

fn sample_lambert(
    plane: &CurvedPlane,
    cfg: &SamplingConfig,
    rng: &mut ChaCha8Rng,
) -> Result<SidesConfig> {
    retry(rng, |rng| {
        let (a, b) = (length(rng, plane, cfg), length(rng, plane, cfg));
        build_lambert_quad(plane, a, b)
            .is_ok()
            .then_some(SidesConfig { a, b })
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LengthConfig {
    pub h: f64,
}

/// Right triangle at `A`; a line through `C` crosses the line `AB` at `D`.
pub struct Lam13;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam13Config {
    pub ab: f64,
    pub ac: f64,
    pub ad: f64,
}

impl Check for Lam13 {
    type Config = Lam13Config;

    fn id(&self) -> &'static str {
        "LAM-13"
    }

    fn claim(&self) -> &'static str {
        "in a triangle right at A, a line through C meeting AB at D makes ACD < ACB + ABC < ACE"
    }

    fn regime(&self) -> Regime {
        Regime::new(Some(Holds), Some(Holds), None)
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam13Config> {
        let ab = length(rng, plane, cfg);
        let ac = length(rng, plane, cfg);
        retry(rng, |rng| {
            let ad = uniform(rng, 2.0 * cfg.margin, 3.0 * cfg.scale);
            ((ad - ab).abs() >= cfg.margin).then_some(Lam13Config { ab, ac, ad })
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam13Config) -> Result<Outcome> {
        let a = plane.origin();
        let b = plane.polar(c.ab, 0.0);
        let cc = plane.polar(c.ac, FRAC_PI_2);
        let d = plane.polar(c.ad, 0.0);
        let dc = plane.geodesic_through(&d, &cc)?;
        let e = plane.point_at(&dc, plane.distance(&d, &cc) + c.ac);
        let acd = plane.angle_at(&cc, &a, &d)?;
        let sum = plane.angle_at(&cc, &a, &b)? + plane.angle_at(&b, &a, &cc)?;
        let ace = plane.angle_at(&cc, &a, &e)?;
        Ok(Outcome::with(
            (sum - acd).min(ace - sum),
            json!({ "acd": acd, "acb_plus_abc": sum, "ace": ace }),
        ))
    }

    fn note(&self, _plane: &CurvedPlane, _v: &Verdict) -> Option<String> {
        Some("checked for K <= 0 only; the sphere violates other Euclidean axioms".into())
    }
}

/// Angle sums of a triangle and of the two parts cut off by a cevian.
pub struct Lam15;

impl Check for Lam15 {
    type Config = CevianConfig;

    fn id(&self) -> &'static str {
        "LAM-15"
    }

    fn claim(&self) -> &'static str {
        "if all triangles have the same angle sum, that sum is two right angles"
    }

    fn regime(&self) -> Regime {
        ALL_K
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<CevianConfig> {
        sample_cevian(plane, cfg, rng)
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &CevianConfig) -> Result<Outcome> {
        let sums = cevian_split(plane, c)?.map(|t| t.angle_sum);
        let spread = max_of(sums) - min_of(sums);
        let deviation = max_of(sums.map(|s| (s - PI).abs()));
        // Either the sums differ (the premise fails) or they all equal pi.
        Ok(Outcome::with(
            (spread - EQ_TOL).max(EQ_TOL - deviation),
            json!({ "spread": spread, "deviation_from_pi": deviation }),
        ))
    }

    fn note(&self, plane: &CurvedPlane, v: &Verdict) -> Option<String> {
        if plane.is_flat() {
            Some("all sampled angle sums equal pi".into())
        } else {
            Some(format!(
                "angle sums differ between a triangle and its parts (smallest spread {:.3e}), so the premise never holds",
                v.min_margin + EQ_TOL
            ))
        }
    }
}

/// Supremum of the angle `AGF` as `A` runs out along the base line, where
/// `GF` is perpendicular to the base at `F`.
pub struct Lam16;

/// How close to a right angle `AGF` must get.
const LAM16_EPS: f64 = 1e-6;

impl Lam16 {
    fn supremum(plane: &CurvedPlane, gf: f64) -> Result<f64> {
        let f = plane.origin();
        let g = plane.polar(gf, FRAC_PI_2);
        let k = plane.curvature();
        let angle = |x: f64| plane.angle_at(&g, &plane.polar(x, 0.0), &f);
        let mut sup: f64 = 0.0;
        let mut x = gf;
        if k > 0.0 {
            let cap = plane.hemisphere_cap();
            while x < cap {
                sup = sup.max(angle(x)?);
                x *= 2.0;
            }
            sup = sup.max(angle(cap)?);
        } else {
            let far = if k < 0.0 { 20.0 / plane.kappa() } else { gf * 1e7 };
            while x <= far {
                sup = sup.max(angle(x)?);
                x *= 2.0;
            }
            sup = sup.max(angle(far)?);
        }
        Ok(sup)
    }
}

impl Check for Lam16 {
    type Config = LengthConfig;

    fn id(&self) -> &'static str {
        "LAM-16"
    }

    fn claim(&self) -> &'static str {
        "the angle AGF can be brought as close to a right angle as one wishes by taking A far out"
    }

    fn regime(&self) -> Regime {
        Regime::new(Some(Fails), Some(Holds), Some(Holds))
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<LengthConfig> {
        Ok(LengthConfig {
            h: length(rng, plane, cfg),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &LengthConfig) -> Result<Outcome> {
        let sup = Self::supremum(plane, c.h)?;
        let gap = FRAC_PI_2 - sup;
        let mut details = json!({ "supremum": sup, "gap": gap });
        if plane.curvature() < 0.0 {
            let pi_gf = trig::angle_of_parallelism(plane, c.h)?;
            details["parallelism_gap"] = json!(FRAC_PI_2 - pi_gf);
        }
        Ok(Outcome::with(LAM16_EPS - gap, details))
    }

    fn note(&self, plane: &CurvedPlane, v: &Verdict) -> Option<String> {
        (plane.curvature() < 0.0).then(|| {
            let d = &v.witness.outcome.details;
            format!(
                "AGF stays below the angle of parallelism: gap {} vs pi/2 - Pi(GF) = {}",
                d["gap"], d["parallelism_gap"]
            )
        })
    }
}

/// Birectangular quadrilateral `CBDE` with right angles at `B`, `D`; `G` is
/// where the perpendicular at the midpoint `F` of `BD` meets `CE`.
pub struct Lam23;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam23Config {
    pub width: f64,
    pub cb: f64,
    pub de: f64,
}

impl Check for Lam23 {
    type Config = Lam23Config;

    fn id(&self) -> &'static str {
        "LAM-23"
    }

    fn claim(&self) -> &'static str {
        "in the birectangle CBDE, CB < DE if and only if the angle CGF is acute"
    }

    fn regime(&self) -> Regime {
        ALL_K
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam23Config> {
        let width = length(rng, plane, cfg);
        retry(rng, |rng| {
            let cb = length(rng, plane, cfg);
            let de = length(rng, plane, cfg);
            ((cb - de).abs() >= cfg.margin / 5.0).then_some(Lam23Config { width, cb, de })
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam23Config) -> Result<Outcome> {
        let base = plane.ray_from_origin(0.0);
        let f = plane.origin();
        let cc = plane.point_at(&plane.perpendicular_at(&base, -c.width / 2.0), c.cb);
        let e = plane.point_at(&plane.perpendicular_at(&base, c.width / 2.0), c.de);
        let axis = plane.perpendicular_at(&base, 0.0);
        let g = meet(plane, &axis, &plane.geodesic_through(&e, &cc)?, &f)?;
        let cgf = plane.angle_at(&g, &cc, &f)?;
        let sign = (c.de - c.cb).signum();
        Ok(Outcome::with(sign * (FRAC_PI_2 - cgf), json!({ "cgf": cgf })))
    }
}

/// Foot angles along a line `DJ` through `P`, above the base line `CL`:
/// a limiting parallel for `K < 0`, the perpendicular to `PO` otherwise.
pub struct Lam26;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam26Config {
    pub h: f64,
    pub reach: f64,
}

impl Lam26 {
    fn line(plane: &CurvedPlane, h: f64) -> Result<Geodesic> {
        let p = plane.polar(h, FRAC_PI_2);
        let down = plane.geodesic_through(&p, &plane.origin())?;
        let theta = if plane.curvature() < 0.0 {
            trig::angle_of_parallelism(plane, h)?
        } else {
            FRAC_PI_2
        };
        // Of the two lines at this angle, take the one heading toward +x.
        let g = plane.rotate_direction(&down, &p, theta);
        if plane.point_at(&g, h).coords().x > 0.0 {
            Ok(g)
        } else {
            Ok(plane.rotate_direction(&down, &p, -theta))
        }
    }
}

impl Check for Lam26 {
    type Config = Lam26Config;

    fn id(&self) -> &'static str {
        "LAM-26"
    }

    fn claim(&self) -> &'static str {
        "if the angle between a line and the perpendiculars dropped from it is everywhere acute, it is constant"
    }

    fn regime(&self) -> Regime {
        Regime::new(Some(Probe), Some(Probe), Some(Probe))
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam26Config> {
        Ok(Lam26Config {
            h: length(rng, plane, cfg),
            reach: length(rng, plane, cfg),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam26Config) -> Result<Outcome> {
        let dj = Self::line(plane, c.h)?;
        let cl = plane.ray_from_origin(0.0);
        let step = (c.reach / 2.0).min(0.5);
        let mut angles = Vec::with_capacity(7);
        for i in -3..=3 {
            let t = c.reach * f64::from(i) / 3.0;
            let b = plane.point_at(&dj, t);
            let (a, _) = plane.perpendicular_foot(&b, &cl)?;
            let ahead = plane.point_at(&dj, t + step);
            angles.push(plane.angle_at(&b, &ahead, &a)?);
        }
        let (lo, hi) = (min_of(angles.iter().copied()), max_of(angles.iter().copied()));
        let all_acute = hi < FRAC_PI_2 - EQ_TOL;
        // A counterexample needs the premise (all acute) without the
        // conclusion (constant).
        let slack = (hi - (FRAC_PI_2 - EQ_TOL)).max(EQ_TOL - (hi - lo));
        Ok(Outcome::with(
            slack,
            json!({ "min_angle": lo, "max_angle": hi, "all_acute": all_acute }),
        ))
    }

    fn note(&self, _plane: &CurvedPlane, v: &Verdict) -> Option<String> {
        let d = &v.witness.outcome.details;
        Some(if v.failures > 0 {
            format!(
                "foot angle acute everywhere yet not constant in {} of {} configurations (worst: from {} to {})",
                v.failures, v.trials, d["min_angle"], d["max_angle"]
            )
        } else {
            "no line with everywhere-acute, non-constant foot angles was sampled".into()
        })
    }
}

/// Elementary facts about the trirectangle `ABDC`.
pub struct Lam2838;

impl Check for Lam2838 {
    type Config = SidesConfig;

    fn id(&self) -> &'static str {
        "LAM-2838"
    }

    fn claim(&self) -> &'static str {
        "trirectangles: D lies inside the right angle at A, the fourth angle is symmetric in the sides, and the doubled figure has equal summit angles"
    }

    fn regime(&self) -> Regime {
        ALL_K
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<SidesConfig> {
        sample_lambert(plane, cfg, rng)
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &SidesConfig) -> Result<Outcome> {
        let q = build_lambert_quad(plane, c.a, c.b)?;
        let swapped = build_lambert_quad(plane, c.b, c.a)?;
        let [a, b, d, cc] = q.vertices;
        let angles = q.measured_angles(plane)?;
        let right = max_of([angles[0], angles[1], angles[3]].map(|x| (x - FRAC_PI_2).abs()));
        let symmetric = (q.phi - swapped.phi).abs();
        let bad = plane.angle_at(&a, &b, &d)?;
        let dac = plane.angle_at(&a, &d, &cc)?;
        let inside = (bad + dac - FRAC_PI_2).abs();
        // Reflect across AB: cCDd is a Saccheri quadrilateral on the base cC.
        let ab = plane.geodesic_through(&a, &b)?;
        let (c2, d2) = (plane.reflect(&cc, &ab), plane.reflect(&d, &ab));
        let at_d = plane.angle_at(&d, &cc, &d2)?;
        let at_d2 = plane.angle_at(&d2, &c2, &d)?;
        let folded = (at_d - at_d2).abs().max((at_d - q.phi).abs());
        let worst = max_of([right, symmetric, inside, folded]);
        Ok(Outcome::with(
            bad.min(dac).min(EQ_TOL - worst),
            json!({ "phi": q.phi, "bad": bad, "dac": dac, "deviation": worst }),
        ))
    }
}

/// Perpendiculars from the base of a Saccheri quadrilateral to its summit.
pub struct Lam41;

impl Check for Lam41 {
    type Config = SidesConfig;

    fn id(&self) -> &'static str {
        "LAM-41"
    }

    fn claim(&self) -> &'static str {
        "in a rectangle, the perpendiculars between opposite sides all have the same length"
    }

    fn regime(&self) -> Regime {
        Regime::new(Some(Fails), Some(Holds), Some(Fails))
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<SidesConfig> {
        Ok(SidesConfig {
            a: length(rng, plane, cfg),
            b: length(rng, plane, cfg),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &SidesConfig) -> Result<Outcome> {
        let q = build_saccheri_quad(plane, c.a, c.b)?;
        let [_, _, cc, d] = q.vertices;
        let base = plane.ray_from_origin(0.0);
        let summit = plane.geodesic_through(&d, &cc)?;
        let mut lengths = Vec::new();
        let mut skew: f64 = 0.0;
        for f in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let s = (f - 0.5) * c.a;
            let perp = plane.perpendicular_at(&base, s);
            let foot = plane.point_at(&base, s);
            let top = meet(plane, &perp, &summit, &foot)?;
            lengths.push(plane.distance(&foot, &top));
            skew = skew.max((plane.crossing_angle(&perp, &summit) - FRAC_PI_2).abs());
        }
        let spread = max_of(lengths.iter().copied()) - min_of(lengths.iter().copied());
        Ok(Outcome::with(
            EQ_TOL - spread.max(skew),
            json!({ "spread": spread, "skew": skew }),
        ))
    }
}

/// A line through a corner of a rectangle, tiled by congruent copies.
pub struct Lam43;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam43Config {
    pub width: f64,
    pub height: f64,
    pub theta: f64,
}

impl Check for Lam43 {
    type Config = Lam43Config;

    fn id(&self) -> &'static str {
        "LAM-43"
    }

    fn claim(&self) -> &'static str {
        "a line through a side of a rectangle at an oblique angle meets the opposite side"
    }

    fn regime(&self) -> Regime {
        Regime::new(None, Some(Holds), None)
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam43Config> {
        Ok(Lam43Config {
            width: length(rng, plane, cfg),
            height: length(rng, plane, cfg),
            theta: uniform(rng, 0.1, FRAC_PI_2 - 0.1),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam43Config) -> Result<Outcome> {
        const MAX_TILES: usize = 100_000;
        let base = plane.ray_from_origin(0.0);
        let top = plane.perpendicular_at(&plane.ray_from_origin(-FRAC_PI_2), -c.height);
        let line = plane.ray_from_origin(c.theta);
        // Heights at which the line crosses the vertical sides of the tiles.
        let mut rise = Vec::new();
        let mut last = 0.0;
        let mut tiles = 0;
        while tiles < MAX_TILES {
            tiles += 1;
            let side = plane.perpendicular_at(&base, tiles as f64 * c.width);
            let hit = meet(plane, &line, &side, &plane.origin())?;
            let y = plane.signed_distance(&hit, &base);
            rise.push(y - last);
            last = y;
            if y >= c.height {
                break;
            }
        }
        let crossing = plane.intersect(&line, &top);
        let x = crossing
            .points
            .first()
            .map(|p| p.coords().x)
            .ok_or_else(|| no_config("line misses the opposite side"))?;
        let in_tile = x > (tiles - 1) as f64 * c.width - EQ_TOL && x <= tiles as f64 * c.width + EQ_TOL;
        let lo = min_of(rise.iter().copied());
        let spread = max_of(rise.iter().copied()) - lo;
        let slack = if in_tile { lo.min(EQ_TOL * (1.0 + c.height) - spread) } else { -1.0 };
        Ok(Outcome::with(
            slack,
            json!({ "tiles": tiles, "rise_per_tile": lo, "crossing_x": x }),
        ))
    }
}

/// Hypothesis class of Saccheri quadrilaterals.
pub struct Lam50;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam50Config {
    pub base: f64,
    pub leg: f64,
    /// Base and leg of the reference quadrilateral.
    pub reference: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Hypothesis {
    Acute,
    Right,
    Obtuse,
}

pub fn classify(summit_angle: f64) -> Hypothesis {
    if summit_angle < FRAC_PI_2 - EQ_TOL {
        Hypothesis::Acute
    } else if summit_angle > FRAC_PI_2 + EQ_TOL {
        Hypothesis::Obtuse
    } else {
        Hypothesis::Right
    }
}

impl Check for Lam50 {
    type Config = Lam50Config;

    fn id(&self) -> &'static str {
        "LAM-50"
    }

    fn claim(&self) -> &'static str {
        "the hypothesis (acute, right or obtuse) found in one quadrilateral holds in every quadrilateral"
    }

    fn regime(&self) -> Regime {
        ALL_K
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam50Config> {
        Ok(Lam50Config {
            base: length(rng, plane, cfg),
            leg: length(rng, plane, cfg),
            reference: length_cap(plane, cfg) / 2.0,
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam50Config) -> Result<Outcome> {
        let q = build_saccheri_quad(plane, c.base, c.leg)?;
        let r = build_saccheri_quad(plane, c.reference, c.reference)?;
        let (class, reference) = (classify(q.summit_angle), classify(r.summit_angle));
        let dq = (q.summit_angle - FRAC_PI_2).abs();
        let dr = (r.summit_angle - FRAC_PI_2).abs();
        let slack = if class != reference {
            -(q.summit_angle - r.summit_angle).abs()
        } else if class == Hypothesis::Right {
            EQ_TOL - dq.max(dr)
        } else {
            dq.min(dr) - EQ_TOL
        };
        Ok(Outcome::with(slack, json!({ "class": class, "reference": reference })))
    }
}

/// Sides of a trirectangle against the opposite sides.
pub struct Lam52;

impl Check for Lam52 {
    type Config = SidesConfig;

    fn id(&self) -> &'static str {
        "LAM-52"
    }

    fn claim(&self) -> &'static str {
        "under the obtuse hypothesis, each side between two right angles is longer than the side opposite"
    }

    fn regime(&self) -> Regime {
        POS
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<SidesConfig> {
        sample_lambert(plane, cfg, rng)
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &SidesConfig) -> Result<Outcome> {
        let q = build_lambert_quad(plane, c.a, c.b)?;
        let (bd, cd) = (q.side_bd(plane), q.side_cd(plane));
        Ok(Outcome::with(
            (q.a - cd).min(q.b - bd),
            json!({ "ab": q.a, "cd": cd, "ac": q.b, "bd": bd }),
        ))
    }
}

pub struct Lam66;

impl Check for Lam66 {
    type Config = SidesConfig;

    fn id(&self) -> &'static str {
        "LAM-66"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis, each side adjacent to the acute angle is greater than the side opposite"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<SidesConfig> {
        sample_lambert(plane, cfg, rng)
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &SidesConfig) -> Result<Outcome> {
        let q = build_lambert_quad(plane, c.a, c.b)?;
        let (bd, cd) = (q.side_bd(plane), q.side_cd(plane));
        Ok(Outcome::with(
            (cd - q.a).min(bd - q.b),
            json!({ "ab": q.a, "cd": cd, "ac": q.b, "bd": bd }),
        ))
    }
}

/// The base line `g` through `A`, the point `B` at height `h` above `A`
/// and the line `l` through `B` perpendicular to `AB`, heading to `+x`.
fn fig8(plane: &CurvedPlane, h: f64) -> Result<(Geodesic, Point, Geodesic)> {
    let g = plane.ray_from_origin(0.0);
    let ab = plane.ray_from_origin(FRAC_PI_2);
    let b = plane.point_at(&ab, h);
    let l = plane.geodesic(b, -plane.normal(&ab))?;
    Ok((g, b, l))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProgressionConfig {
    pub h: f64,
    pub spacing: f64,
}

fn sample_progression(plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> ProgressionConfig {
    ProgressionConfig {
        h: length(rng, plane, cfg),
        spacing: length_cap(plane, cfg) / 6.0,
    }
}

/// Perpendiculars raised on the base at `A, C, E, ...` up to `l`:
/// lengths and the angles they make with `l` on the side of `B`.
fn raised_perpendiculars(plane: &CurvedPlane, c: &ProgressionConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    let (g, b, l) = fig8(plane, c.h)?;
    let mut lengths = vec![c.h];
    let mut angles = Vec::new();
    for i in 1..=6 {
        let s = f64::from(i) * c.spacing;
        let foot = plane.point_at(&g, s);
        let top = meet(plane, &plane.perpendicular_at(&g, s), &l, &foot)?;
        lengths.push(plane.distance(&foot, &top));
        angles.push(plane.angle_at(&top, &foot, &b)?);
    }
    Ok((lengths, angles))
}

/// Perpendiculars dropped from points of `l` at `B, D, F, ...` to the base.
fn dropped_perpendiculars(plane: &CurvedPlane, c: &ProgressionConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    let (g, b, l) = fig8(plane, c.h)?;
    let mut lengths = vec![c.h];
    let mut angles = Vec::new();
    for i in 1..=6 {
        let p = plane.point_at(&l, f64::from(i) * c.spacing);
        let (foot, d) = plane.perpendicular_foot(&p, &g)?;
        lengths.push(d);
        angles.push(plane.angle_at(&p, &foot, &b)?);
    }
    Ok((lengths, angles))
}

fn differences(xs: &[f64]) -> Vec<f64> {
    xs.windows(2).map(|w| w[1] - w[0]).collect()
}

pub struct Lam55;

impl Check for Lam55 {
    type Config = ProgressionConfig;

    fn id(&self) -> &'static str {
        "LAM-55"
    }

    fn claim(&self) -> &'static str {
        "under the obtuse hypothesis the perpendiculars CD, EF, GH, ... decrease more rapidly than linearly"
    }

    fn regime(&self) -> Regime {
        POS
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<ProgressionConfig> {
        Ok(sample_progression(plane, cfg, rng))
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &ProgressionConfig) -> Result<Outcome> {
        let (lengths, _) = raised_perpendiculars(plane, c)?;
        let first = differences(&lengths);
        let second = differences(&first);
        let slack = min_of(first.iter().map(|d| -d)).min(min_of(second.iter().map(|d| -d)));
        Ok(Outcome::with(slack, json!({ "lengths": lengths })))
    }
}

pub struct Lam58;

impl Check for Lam58 {
    type Config = ProgressionConfig;

    fn id(&self) -> &'static str {
        "LAM-58"
    }

    fn claim(&self) -> &'static str {
        "under the obtuse hypothesis the angles at D, F, H, ... become more and more obtuse"
    }

    fn regime(&self) -> Regime {
        POS
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<ProgressionConfig> {
        Ok(sample_progression(plane, cfg, rng))
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &ProgressionConfig) -> Result<Outcome> {
        let (_, angles) = raised_perpendiculars(plane, c)?;
        let slack = (angles[0] - FRAC_PI_2).min(min_of(differences(&angles)));
        Ok(Outcome::with(slack, json!({ "angles": angles })))
    }
}

/// The perpendicular from `l` to the base shrinks to zero at a finite
/// distance, where `l` meets the base; it meets it again at the antipode.
pub struct Lam62;

impl Lam62 {
    fn signed_height(plane: &CurvedPlane, g: &Geodesic, l: &Geodesic, s: f64) -> Result<f64> {
        let foot = plane.point_at(g, s);
        let top = meet(plane, &plane.perpendicular_at(g, s), l, &foot)?;
        Ok(plane.signed_distance(&top, g))
    }
}

impl Check for Lam62 {
    type Config = LengthConfig;

    fn id(&self) -> &'static str {
        "LAM-62"
    }

    fn claim(&self) -> &'static str {
        "under the obtuse hypothesis the perpendiculars reach zero length, so two lines meet in more than one point"
    }

    fn regime(&self) -> Regime {
        POS
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<LengthConfig> {
        Ok(LengthConfig {
            h: length(rng, plane, cfg),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &LengthConfig) -> Result<Outcome> {
        let (g, _, l) = fig8(plane, c.h)?;
        let (mut lo, mut hi) = (0.0, 0.75 * plane.antipodal_distance());
        if Self::signed_height(plane, &g, &l, hi)? >= 0.0 {
            return Ok(Outcome::new(-1.0));
        }
        while hi - lo > 1e-15 * plane.antipodal_distance() {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if Self::signed_height(plane, &g, &l, mid)? > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let zero = plane.point_at(&g, 0.5 * (lo + hi));
        let crossing = plane.intersect(&g, &l);
        let nearest = crossing
            .nearest_to(plane, &zero)
            .ok_or_else(|| no_config("l misses the base"))?;
        let error = plane.distance(&nearest, &zero);
        let separation = match crossing.points.as_slice() {
            [p, q] => plane.distance(p, q),
            _ => 0.0,
        };
        Ok(Outcome::with(
            (1e-8 - error).min(separation - plane.eps()),
            json!({ "zero_at": 0.5 * (lo + hi), "error": error, "separation": separation }),
        ))
    }
}

pub struct Lam68;

impl Check for Lam68 {
    type Config = ProgressionConfig;

    fn id(&self) -> &'static str {
        "LAM-68"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis perpendiculars dropped from farther points are longer"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<ProgressionConfig> {
        Ok(sample_progression(plane, cfg, rng))
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &ProgressionConfig) -> Result<Outcome> {
        let (lengths, _) = dropped_perpendiculars(plane, c)?;
        Ok(Outcome::with(min_of(differences(&lengths)), json!({ "lengths": lengths })))
    }
}

pub struct Lam69;

impl Check for Lam69 {
    type Config = ProgressionConfig;

    fn id(&self) -> &'static str {
        "LAM-69"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis the angles at the feet on l become more and more acute"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<ProgressionConfig> {
        Ok(sample_progression(plane, cfg, rng))
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &ProgressionConfig) -> Result<Outcome> {
        let (_, angles) = dropped_perpendiculars(plane, c)?;
        let slack = (FRAC_PI_2 - angles[0]).min(min_of(differences(&angles).iter().map(|d| -d)));
        Ok(Outcome::with(slack, json!({ "angles": angles })))
    }
}

pub struct Lam70;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam70Config {
    pub h: f64,
    pub bound: f64,
}

impl Check for Lam70 {
    type Config = Lam70Config;

    fn id(&self) -> &'static str {
        "LAM-70"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis the perpendiculars grow larger than any value given in advance"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam70Config> {
        Ok(Lam70Config {
            h: length(rng, plane, cfg),
            bound: uniform(rng, 1.0, 10.0) / plane.kappa(),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam70Config) -> Result<Outcome> {
        let (g, _, l) = fig8(plane, c.h)?;
        let limit = 64.0 / plane.kappa();
        let mut t = 1.0 / plane.kappa();
        loop {
            let d = plane.signed_distance(&plane.point_at(&l, t), &g).abs();
            if d > c.bound || t >= limit {
                return Ok(Outcome::with(d - c.bound, json!({ "at": t, "length": d })));
            }
            t *= 2.0;
        }
    }
}

pub struct Lam71;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam71Config {
    pub h: f64,
    pub reach: f64,
}

impl Check for Lam71 {
    type Config = Lam71Config;

    fn id(&self) -> &'static str {
        "LAM-71"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis two lines with a common perpendicular diverge on both sides"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam71Config> {
        Ok(Lam71Config {
            h: length(rng, plane, cfg),
            reach: length(rng, plane, cfg),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam71Config) -> Result<Outcome> {
        let (g, _, l) = fig8(plane, c.h)?;
        let height = |t: f64| plane.signed_distance(&plane.point_at(&l, t), &g).abs();
        let mut slack = f64::INFINITY;
        for side in [-1.0, 1.0] {
            let heights: Vec<f64> = (0..=3)
                .map(|i| height(side * c.reach * f64::from(i) / 3.0))
                .collect();
            slack = slack.min(min_of(differences(&heights)));
        }
        let cp = plane.common_perpendicular(&g, &l)?;
        Ok(Outcome::with(slack, json!({ "common_perpendicular": cp.length })))
    }
}

/// A trirectangle with one side so long that the erected perpendiculars
/// no longer meet.
pub struct Lam72;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam72Config {
    pub h: f64,
    pub x: f64,
}

impl Check for Lam72 {
    type Config = Lam72Config;

    fn id(&self) -> &'static str {
        "LAM-72"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis a perpendicular erected far enough out does not meet the other line"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam72Config> {
        let h = length(rng, plane, cfg);
        let mut x = h;
        for _ in 0..64 {
            if matches!(build_lambert_quad(plane, h, x), Err(Error::DivergentSides { .. })) {
                return Ok(Lam72Config { h, x: 2.0 * x });
            }
            x *= 2.0;
        }
        Err(no_config("perpendiculars kept meeting"))
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam72Config) -> Result<Outcome> {
        match build_lambert_quad(plane, c.h, c.x) {
            Err(Error::DivergentSides { gap }) => Ok(Outcome::with(gap, json!({ "gap": gap }))),
            Ok(q) => Ok(Outcome::with(-q.phi, json!({ "phi": q.phi }))),
            Err(e) => Err(e),
        }
    }
}

pub struct Lam73;

impl Check for Lam73 {
    type Config = TriangleConfig;

    fn id(&self) -> &'static str {
        "LAM-73"
    }

    fn claim(&self) -> &'static str {
        "under the acute hypothesis the sum of the three angles of a triangle is less than two right angles"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<TriangleConfig> {
        Ok(TriangleConfig {
            vertices: sample_triangle(plane, cfg, rng)?,
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &TriangleConfig) -> Result<Outcome> {
        let [a, b, cc] = c.vertices;
        let t = build_triangle(plane, &a, &b, &cc)?;
        Ok(Outcome::with(PI - t.angle_sum, json!({ "angle_sum": t.angle_sum })))
    }
}

pub struct Lam76;

#[derive(Debug, Serialize, Deserialize)]
pub struct SideConfig {
    pub side: f64,
}

impl Check for Lam76 {
    type Config = SideConfig;

    fn id(&self) -> &'static str {
        "LAM-76"
    }

    fn claim(&self) -> &'static str {
        "in an equilateral triangle the medians cut DF < AF/3 (acute), = AF/3 (right), > AF/3 (obtuse)"
    }

    fn regime(&self) -> Regime {
        ALL_K
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<SideConfig> {
        Ok(SideConfig {
            side: length(rng, plane, cfg),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &SideConfig) -> Result<Outcome> {
        let (ratio, _) = median_ratio(plane, c.side)?;
        let third = 1.0 / 3.0;
        let slack = match plane.sign() {
            -1 => third - ratio,
            1 => ratio - third,
            _ => EQ_TOL - (ratio - third).abs(),
        };
        Ok(Outcome::with(slack, json!({ "ratio": ratio })))
    }
}

/// The side of an equilateral triangle as a function of its angle.
pub struct Lam80;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam80Config {
    pub alpha: f64,
    pub beta: f64,
}

impl Lam80 {
    fn range(plane: &CurvedPlane) -> (f64, f64) {
        if plane.curvature() < 0.0 {
            (0.05, PI / 3.0 - 1e-3)
        } else {
            (PI / 3.0 + 1e-3, FRAC_PI_2 - 1e-3)
        }
    }

    /// Largest deviation between the prescribed angle and the angles and
    /// sides measured on the constructed triangle.
    fn round_trip(plane: &CurvedPlane, alpha: f64) -> Result<(f64, f64)> {
        let s = equilateral_from_angle(plane, alpha)?;
        let c = plane.polar(s, equilateral_angle(plane, s)?);
        let t = build_triangle(plane, &plane.origin(), &plane.polar(s, 0.0), &c)?;
        let angles = max_of(t.angles.map(|x| (x - alpha).abs()));
        let sides = max_of(t.sides.map(|x| (x - s).abs()));
        Ok((s, angles.max(sides)))
    }
}

impl Check for Lam80 {
    type Config = Lam80Config;

    fn id(&self) -> &'static str {
        "LAM-80"
    }

    fn claim(&self) -> &'static str {
        "the angle of an equilateral triangle determines its side: an absolute measure of length"
    }

    fn regime(&self) -> Regime {
        Regime::new(Some(Holds), None, Some(Holds))
    }

    fn sample(&self, plane: &CurvedPlane, _cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam80Config> {
        let (lo, hi) = Self::range(plane);
        retry(rng, |rng| {
            let alpha = uniform(rng, lo, hi);
            let beta = uniform(rng, lo, hi);
            ((alpha - beta).abs() >= 1e-3).then_some(Lam80Config { alpha, beta })
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam80Config) -> Result<Outcome> {
        let (sa, ea) = Self::round_trip(plane, c.alpha)?;
        let (sb, eb) = Self::round_trip(plane, c.beta)?;
        // Sides shrink with the angle for K < 0 and grow with it for K > 0.
        let order = (sa - sb) * (c.alpha - c.beta) * f64::from(plane.sign());
        let separated = order.signum() * (sa - sb).abs();
        Ok(Outcome::with(
            separated.min(1e-8 - ea.max(eb)),
            json!({ "sides": [sa, sb], "round_trip_error": ea.max(eb) }),
        ))
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// Area of a triangle by integrating the area element in geodesic polar
/// coordinates about its widest vertex.
pub fn fan_area(plane: &CurvedPlane, vertices: &[Point; 3]) -> Result<f64> {
    let angles = [0, 1, 2].map(|i| {
        plane.angle_at(&vertices[i], &vertices[(i + 1) % 3], &vertices[(i + 2) % 3])
    });
    let mut widest = 0;
    for i in 1..3 {
        if angles[i].clone()? > angles[widest].clone()? {
            widest = i;
        }
    }
    let a = &vertices[widest];
    let b = &vertices[(widest + 1) % 3];
    let c = &vertices[(widest + 2) % 3];
    let alpha = angles[widest].clone()?;
    let ab = plane.geodesic_through(a, b)?;
    let bc = plane.geodesic_through(b, c)?;
    let turn = plane.signed_distance(c, &ab).signum();
    let nodes = gauss_legendre(10);
    // (1 - cos_k(rho)) / K, written to survive K = 0.
    let element = |theta: f64| -> Result<f64> {
        let ray = plane.rotate_direction(&ab, a, turn * theta);
        let rho = plane.distance(a, &meet(plane, &ray, &bc, b)?);
        Ok(2.0 * plane.sin_k(rho / 2.0).powi(2))
    };
    let rule = |lo: f64, hi: f64| -> Result<f64> {
        let half = 0.5 * (hi - lo);
        let mut sum = 0.0;
        for &(x, w) in &nodes {
            sum += w * element(lo + half * (x + 1.0))?;
        }
        Ok(half * sum)
    };
    // Adaptive bisection: thin triangles put a near-singularity of the
    // integrand next to an end of the interval.
    let mut total = 0.0;
    let mut stack = vec![(0.0, alpha, rule(0.0, alpha)?, 0u32)];
    while let Some((lo, hi, whole, depth)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let (left, right) = (rule(lo, mid)?, rule(mid, hi)?);
        if (left + right - whole).abs() <= 1e-14 * (hi - lo) || depth >= 40 {
            total += left + right;
        } else {
            stack.push((lo, mid, left, depth + 1));
            stack.push((mid, hi, right, depth + 1));
        }
    }
    Ok(total)
}

pub struct Lam81;

impl Check for Lam81 {
    type Config = CevianConfig;

    fn id(&self) -> &'static str {
        "LAM-81"
    }

    fn claim(&self) -> &'static str {
        "area is proportional to the angular defect (excess on the sphere) and adds under subdivision"
    }

    fn regime(&self) -> Regime {
        ALL_K
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<CevianConfig> {
        sample_cevian(plane, cfg, rng)
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &CevianConfig) -> Result<Outcome> {
        let [t, t1, t2] = cevian_split(plane, c)?;
        let whole = area(plane, &t);
        let additivity = (whole - area(plane, &t1) - area(plane, &t2)).abs();
        let quadrature = (fan_area(plane, &c.vertices)? - whole).abs();
        Ok(Outcome::with(
            (EQ_TOL * whole.max(1.0) - additivity).min(1e-8 - quadrature),
            json!({ "area": whole, "additivity_error": additivity, "quadrature_error": quadrature }),
        ))
    }
}

pub struct Lam82;

#[derive(Debug, Serialize, Deserialize)]
pub struct Lam82Config {
    pub a: f64,
    pub b: f64,
    pub gamma: f64,
}

impl Check for Lam82 {
    type Config = Lam82Config;

    fn id(&self) -> &'static str {
        "LAM-82"
    }

    fn claim(&self) -> &'static str {
        "the acute hypothesis is the geometry of a sphere of imaginary radius"
    }

    fn regime(&self) -> Regime {
        NEG
    }

    fn sample(&self, plane: &CurvedPlane, cfg: &SamplingConfig, rng: &mut ChaCha8Rng) -> Result<Lam82Config> {
        let top = 3.0 / plane.kappa();
        Ok(Lam82Config {
            a: uniform(rng, cfg.margin, top),
            b: uniform(rng, cfg.margin, top),
            gamma: uniform(rng, cfg.margin, PI - cfg.margin),
        })
    }

    fn evaluate(&self, plane: &CurvedPlane, c: &Lam82Config) -> Result<Outcome> {
        let r = trig::imaginary_correspondence_residual(plane, c.a, c.b, c.gamma)?;
        Ok(Outcome::with(1e-10 - r, json!({ "residual": r })))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(k: f64) -> CurvedPlane {
        CurvedPlane::with_curvature(k).unwrap()
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let nodes = gauss_legendre(12);
        let total: f64 = nodes.iter().map(|(_, w)| w).sum();
        assert!((total - 2.0).abs() < 1e-14);
        let x8: f64 = nodes.iter().map(|(x, w)| w * x.powi(8)).sum();
        assert!((x8 - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn fan_area_matches_octant() {
        let s = plane(1.0);
        let v = [
            s.origin(),
            s.point([1.0, 0.0, 0.0]).unwrap(),
            s.point([0.0, 1.0, 0.0]).unwrap(),
        ];
        assert!((fan_area(&s, &v).unwrap() - FRAC_PI_2).abs() < 1e-12);
        let e = plane(0.0);
        let v = [e.origin(), e.polar(3.0, 0.0), e.polar(4.0, FRAC_PI_2)];
        assert!((fan_area(&e, &v).unwrap() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn fig8_line_heads_right() {
        for k in [-1.0, 1.0] {
            let p = plane(k);
            let (_, b, l) = fig8(&p, 0.3).unwrap();
            assert!(p.point_at(&l, 0.2).coords().x > 0.0);
            assert!(p.distance(&p.point_at(&l, 0.0), &b) < 1e-15);
        }
    }

    #[test]
    fn limiting_parallel_never_meets_base() {
        let h = plane(-1.0);
        let dj = Lam26::line(&h, 0.7).unwrap();
        assert!(h.intersect(&dj, &h.ray_from_origin(0.0)).is_empty());
        let far = h.point_at(&dj, 15.0);
        assert!(far.coords().x > 0.0);
        assert!(h.signed_distance(&far, &h.ray_from_origin(0.0)) < 1e-5);
    }

    #[test]
    fn hypothesis_classes() {
        assert_eq!(classify(1.0), Hypothesis::Acute);
        assert_eq!(classify(FRAC_PI_2), Hypothesis::Right);
        assert_eq!(classify(2.0), Hypothesis::Obtuse);
    }
}
