//! SVG rendering of figures and counterexample witnesses.
//!
//! A [`Scene`] is a list of model-space elements. Rendering samples every
//! geodesic piece into a polyline and maps it to the page: the Poincare disk
//! for `K < 0`, an orthographic view of the upper hemisphere for `K > 0` (the
//! far side dashed) and the plane itself for `K = 0`.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use crate::counterexamples::{
    self, angle_interior_lines, khayyam_figure, perpendicular_bisector, playfair_lines,
    wallis_lines, AngleInteriorConfig, CircumcircleConfig, EquidistantConfig, KhayyamConfig,
    PlayfairConfig, SimsonConfig, WallisConfig, Witness,
};
use crate::error::{Error, Result};
use crate::figures::{build_lambert_quad, build_saccheri_quad};
use crate::plane::{CurvedPlane, Geodesic, Point, DEFAULT_EPS};
use crate::trig;

/// Figure ids accepted by [`figure_scene`].
pub const FIGURE_IDS: &[&str] = &["fig8", "khayyam", "lam16", "lambert-quad", "saccheri", "wallis"];

/// Segments per sampled geodesic piece.
pub const SAMPLES: usize = 128;

const SIZE: f64 = 600.0;

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    /// The part of `geodesic` between arc lengths `from` and `to`.
    Line {
        geodesic: Geodesic,
        from: f64,
        to: f64,
        construction: bool,
    },
    Segment {
        from: Point,
        to: Point,
        construction: bool,
    },
    Point {
        at: Point,
        label: String,
    },
    /// Right-angle mark at `vertex` between the directions to `a` and `b`.
    RightAngle {
        vertex: Point,
        a: Point,
        b: Point,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub title: String,
    pub elements: Vec<Element>,
    /// Typical length of the figure; sets the extent of lines when `K = 0`
    /// and the size of right-angle marks.
    pub scale: f64,
}

impl Scene {
    pub fn new(title: impl Into<String>, scale: f64) -> Self {
        Self {
            title: title.into(),
            elements: Vec::new(),
            scale,
        }
    }

    /// The whole line, or as much of it as is worth drawing.
    pub fn line(&mut self, plane: &CurvedPlane, g: &Geodesic) {
        let reach = if plane.curvature() < 0.0 {
            12.0 / plane.kappa()
        } else if plane.curvature() > 0.0 {
            PI / plane.kappa()
        } else {
            3.0 * self.scale
        };
        self.elements.push(Element::Line {
            geodesic: *g,
            from: -reach,
            to: reach,
            construction: false,
        });
    }

    pub fn ray(&mut self, g: &Geodesic, from: f64, to: f64, construction: bool) {
        self.elements.push(Element::Line {
            geodesic: *g,
            from,
            to,
            construction,
        });
    }

    pub fn segment(&mut self, from: &Point, to: &Point) {
        self.elements.push(Element::Segment {
            from: *from,
            to: *to,
            construction: false,
        });
    }

    pub fn construction(&mut self, from: &Point, to: &Point) {
        self.elements.push(Element::Segment {
            from: *from,
            to: *to,
            construction: true,
        });
    }

    pub fn polygon(&mut self, vertices: &[Point]) {
        for (i, p) in vertices.iter().enumerate() {
            self.segment(p, &vertices[(i + 1) % vertices.len()]);
        }
    }

    pub fn point(&mut self, at: &Point, label: impl Into<String>) {
        self.elements.push(Element::Point {
            at: *at,
            label: label.into(),
        });
    }

    pub fn right_angle(&mut self, vertex: &Point, a: &Point, b: &Point) {
        self.elements.push(Element::RightAngle {
            vertex: *vertex,
            a: *a,
            b: *b,
        });
    }

    /// Number of elements drawn as polylines.
    pub fn geodesic_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|e| matches!(e, Element::Line { .. } | Element::Segment { .. }))
            .count()
    }
}

/// Page coordinates in model units, plus whether the point is on the near
/// side.
fn project(plane: &CurvedPlane, p: &Point) -> (f64, f64, bool) {
    let c = p.coords();
    let k = plane.curvature();
    if k == 0.0 {
        return (c.x, c.y, true);
    }
    let kappa = plane.kappa();
    let (x, y, z) = (c.x * kappa, c.y * kappa, c.z * kappa);
    if k < 0.0 {
        (x / (1.0 + z), y / (1.0 + z), true)
    } else {
        (x, y, z >= -1e-12)
    }
}

struct Piece {
    points: Vec<(f64, f64)>,
    hidden: bool,
}

/// Samples a geodesic piece and splits it into runs of equal visibility.
fn sample_piece(plane: &CurvedPlane, g: &Geodesic, from: f64, to: f64) -> Vec<Piece> {
    let mut pieces: Vec<Piece> = Vec::new();
    for i in 0..=SAMPLES {
        let s = from + (to - from) * i as f64 / SAMPLES as f64;
        let (x, y, visible) = project(plane, &plane.point_at(g, s));
        match pieces.last_mut() {
            Some(last) if last.hidden == !visible => last.points.push((x, y)),
            Some(last) => {
                // Share the break point so the runs join up.
                let joint = *last.points.last().expect("non-empty run");
                pieces.push(Piece {
                    points: vec![joint, (x, y)],
                    hidden: !visible,
                });
            }
            None => pieces.push(Piece {
                points: vec![(x, y)],
                hidden: !visible,
            }),
        }
    }
    pieces
}

struct Frame {
    cx: f64,
    cy: f64,
    half: f64,
}

impl Frame {
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let s = SIZE / (2.0 * self.half);
        (SIZE / 2.0 + (x - self.cx) * s, SIZE / 2.0 - (y - self.cy) * s)
    }
}

fn polyline(out: &mut String, frame: &Frame, pts: &[(f64, f64)], class: &str) {
    out.push_str("<polyline class=\"");
    out.push_str(class);
    out.push_str("\" points=\"");
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x:.3},{y:.3}");
    }
    out.push_str("\"/>\n");
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders a scene as a standalone SVG document.
///
/// Every line or segment becomes one `<g class="geodesic">` group holding
/// its polylines; on the sphere the far-side runs carry the class `hidden`.
pub fn render_svg(plane: &CurvedPlane, scene: &Scene) -> Result<String> {
    let mut pieces = Vec::new();
    let mut marks = Vec::new();
    let mut labels = Vec::new();
    for e in &scene.elements {
        match e {
            Element::Line {
                geodesic,
                from,
                to,
                construction,
            } => pieces.push((sample_piece(plane, geodesic, *from, *to), *construction)),
            Element::Segment {
                from,
                to,
                construction,
            } => {
                let g = plane.geodesic_through(from, to)?;
                let len = plane.distance(from, to);
                pieces.push((sample_piece(plane, &g, 0.0, len), *construction));
            }
            Element::Point { at, label } => {
                let (x, y, visible) = project(plane, at);
                labels.push(((x, y), visible, label.clone()));
            }
            Element::RightAngle { vertex, a, b } => {
                let size = 0.12 * scene.scale.min(plane.distance(vertex, a)).min(plane.distance(vertex, b));
                let toward = |q: &Point| -> Result<(f64, f64)> {
                    let g = plane.geodesic_through(vertex, q)?;
                    let (x, y, _) = project(plane, &plane.point_at(&g, size));
                    Ok((x, y))
                };
                let (vx, vy, _) = project(plane, vertex);
                let (ax, ay) = toward(a)?;
                let (bx, by) = toward(b)?;
                marks.push([(ax, ay), (ax + bx - vx, ay + by - vy), (bx, by)]);
            }
        }
    }

    let frame = if plane.is_flat() {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        let all = pieces
            .iter()
            .flat_map(|(ps, _)| ps.iter().flat_map(|p| p.points.iter().copied()))
            .chain(labels.iter().map(|l| l.0));
        for (x, y) in all {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if !lo.0.is_finite() {
            lo = (-1.0, -1.0);
            hi = (1.0, 1.0);
        }
        Frame {
            cx: 0.5 * (lo.0 + hi.0),
            cy: 0.5 * (lo.1 + hi.1),
            half: 0.55 * (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9),
        }
    } else {
        Frame {
            cx: 0.0,
            cy: 0.0,
            half: 1.05,
        }
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<title>{} (K = {})</title>", escape(&scene.title), plane.curvature());
    out.push_str(
        "<style>\n\
         polyline { fill: none; stroke: #1f3a5f; stroke-width: 1.6; }\n\
         .construction polyline { stroke: #8a8a8a; stroke-width: 1; }\n\
         polyline.hidden { stroke-dasharray: 5 4; stroke-opacity: 0.5; }\n\
         polyline.mark { stroke: #b03030; stroke-width: 1; }\n\
         circle.horizon { fill: none; stroke: #999; stroke-width: 1; }\n\
         circle.point { fill: #b03030; }\n\
         text { font: 14px sans-serif; fill: #222; }\n\
         </style>\n",
    );
    let _ = writeln!(out, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
    if !plane.is_flat() {
        let r = SIZE / (2.0 * frame.half);
        let _ = writeln!(
            out,
            "<circle class=\"horizon\" cx=\"{c}\" cy=\"{c}\" r=\"{r:.3}\"/>",
            c = SIZE / 2.0
        );
    }
    for (runs, construction) in &pieces {
        out.push_str(if *construction {
            "<g class=\"geodesic construction\">\n"
        } else {
            "<g class=\"geodesic\">\n"
        });
        for run in runs {
            polyline(&mut out, &frame, &run.points, if run.hidden { "hidden" } else { "visible" });
        }
        out.push_str("</g>\n");
    }
    for m in &marks {
        polyline(&mut out, &frame, m, "mark");
    }
    for ((x, y), visible, label) in &labels {
        let (px, py) = frame.map((*x, *y));
        let opacity = if *visible { "" } else { " fill-opacity=\"0.4\"" };
        let _ = writeln!(
            out,
            "<circle class=\"point\" cx=\"{px:.3}\" cy=\"{py:.3}\" r=\"3\"{opacity}/>"
        );
        if !label.is_empty() {
            let _ = writeln!(
                out,
                "<text x=\"{:.3}\" y=\"{:.3}\"{opacity}>{}</text>",
                px + 6.0,
                py - 6.0,
                escape(label)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn param(params: &BTreeMap<String, f64>, name: &str, default: f64) -> f64 {
    params.get(name).copied().unwrap_or(default)
}

fn check_params(params: &BTreeMap<String, f64>, known: &[&str]) -> Result<()> {
    for (name, v) in params {
        if !known.contains(&name.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "unknown parameter {name:?}; expected one of {known:?}"
            )));
        }
        if !v.is_finite() {
            return Err(Error::InvalidParameter(format!("{name} = {v}")));
        }
    }
    Ok(())
}

/// Curvature radius, or 1 when flat.
fn unit(plane: &CurvedPlane) -> f64 {
    if plane.is_flat() {
        1.0
    } else {
        1.0 / plane.kappa()
    }
}

/// Builds the named figure. Unknown parameter names are rejected; missing
/// ones take defaults scaled to the curvature radius.
pub fn figure_scene(plane: &CurvedPlane, id: &str, params: &BTreeMap<String, f64>) -> Result<Scene> {
    let r = unit(plane);
    match id {
        "lambert-quad" => {
            check_params(params, &["a", "b"])?;
            let q = build_lambert_quad(plane, param(params, "a", 0.8 * r), param(params, "b", 0.6 * r))?;
            let [a, b, d, c] = q.vertices;
            let mut s = Scene::new("Trirectangular quadrilateral ABDC", q.a.max(q.b));
            s.polygon(&[a, b, d, c]);
            s.right_angle(&a, &b, &c);
            s.right_angle(&b, &a, &d);
            s.right_angle(&c, &a, &d);
            for (p, l) in [(a, "A"), (b, "B"), (c, "C"), (d, "D")] {
                s.point(&p, l);
            }
            Ok(s)
        }
        "saccheri" => {
            check_params(params, &["base", "leg"])?;
            let q = build_saccheri_quad(plane, param(params, "base", r), param(params, "leg", r))?;
            let [a, b, c, d] = q.vertices;
            let mut s = Scene::new("Birectangular quadrilateral ABCD", q.base.max(q.leg));
            s.polygon(&[a, b, c, d]);
            s.construction(&plane.midpoint(&a, &b)?, &plane.midpoint(&d, &c)?);
            s.right_angle(&a, &b, &d);
            s.right_angle(&b, &a, &c);
            for (p, l) in [(a, "A"), (b, "B"), (c, "C"), (d, "D")] {
                s.point(&p, l);
            }
            Ok(s)
        }
        "fig8" => {
            check_params(params, &["h", "spacing"])?;
            let h = param(params, "h", 0.5 * r);
            let spacing = param(params, "spacing", 0.25 * r);
            if !(h > 0.0 && spacing > 0.0) {
                return Err(Error::InvalidParameter("h and spacing must be positive".into()));
            }
            let g = plane.ray_from_origin(0.0);
            let ab = plane.ray_from_origin(FRAC_PI_2);
            let b = plane.point_at(&ab, h);
            let l = plane.geodesic(b, -plane.normal(&ab))?;
            let mut s = Scene::new("Line l perpendicular to AB, with perpendiculars to the base", 6.0 * spacing);
            s.line(plane, &g);
            s.line(plane, &l);
            s.segment(&plane.origin(), &b);
            s.right_angle(&plane.origin(), &plane.point_at(&g, spacing), &b);
            s.right_angle(&b, &plane.point_at(&l, spacing), &plane.origin());
            s.point(&plane.origin(), "A");
            s.point(&b, "B");
            for i in 1..=6 {
                let p = plane.point_at(&l, f64::from(i) * spacing);
                let (foot, _) = plane.perpendicular_foot(&p, &g)?;
                s.construction(&foot, &p);
                s.point(&p, "");
            }
            Ok(s)
        }
        "wallis" => {
            check_params(params, &["a", "b", "u"])?;
            let (a, b) = (param(params, "a", PI / 3.0), param(params, "b", PI / 3.0));
            let u = param(params, "u", 1.5 * r);
            let [l3, l1, l4] = wallis_lines(plane, a, b, u)?;
            let mut s = Scene::new("Transporting a line along l3", u);
            s.line(plane, &l3);
            s.line(plane, &l1);
            s.line(plane, &l4);
            s.point(&plane.origin(), "A");
            s.point(&plane.polar(u, 0.0), "B");
            Ok(s)
        }
        "khayyam" => {
            check_params(params, &["base", "legs"])?;
            let cap = if plane.curvature() > 0.0 { 0.9 * plane.hemisphere_cap() } else { f64::INFINITY };
            let base = param(params, "base", r);
            let legs = param(params, "legs", (2.0 * r).min(cap));
            let f = khayyam_figure(plane, base, legs)?;
            Ok(khayyam_scene(plane, &f, base.max(legs)))
        }
        "lam16" => {
            check_params(params, &["gf"])?;
            let gf = param(params, "gf", 0.5 * r);
            if !(gf > 0.0) {
                return Err(Error::InvalidParameter("gf must be positive".into()));
            }
            let f = plane.origin();
            let g = plane.polar(gf, FRAC_PI_2);
            let base = plane.ray_from_origin(0.0);
            let mut s = Scene::new("Angle AGF as A moves out along the base", 4.0 * gf);
            s.line(plane, &base);
            s.segment(&f, &g);
            s.right_angle(&f, &plane.polar(gf, 0.0), &g);
            let mut x = gf;
            for _ in 0..5 {
                if plane.curvature() > 0.0 && x >= plane.hemisphere_cap() {
                    break;
                }
                let a = plane.polar(x, 0.0);
                s.construction(&g, &a);
                s.point(&a, "");
                x *= 2.0;
            }
            if plane.curvature() < 0.0 {
                let down = plane.geodesic_through(&g, &f)?;
                let pi = trig::angle_of_parallelism(plane, gf)?;
                let limit = plane.rotate_direction(&down, &g, pi);
                s.ray(&limit, 0.0, 12.0 / plane.kappa(), false);
            }
            s.point(&f, "F");
            s.point(&g, "G");
            Ok(s)
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown figure {other:?}; expected one of {FIGURE_IDS:?}"
        ))),
    }
}

fn khayyam_scene(plane: &CurvedPlane, f: &counterexamples::KhayyamFigure, scale: f64) -> Scene {
    let mut s = Scene::new("Khayyam's figure: HKI against AC and BD", scale);
    s.line(plane, &f.ac);
    s.line(plane, &f.bd);
    s.line(plane, &f.hki);
    let pt = |c: char| f.points.iter().find(|(l, _)| *l == c).map(|(_, p)| *p).expect("labelled point");
    s.segment(&pt('A'), &pt('B'));
    s.construction(&pt('C'), &pt('D'));
    s.construction(&pt('E'), &pt('K'));
    for (l, p) in &f.points {
        s.point(p, l.to_string());
    }
    s
}

fn parse<C: serde::de::DeserializeOwned>(w: &Witness) -> Result<C> {
    serde_json::from_value(w.configuration.clone()).map_err(|e| Error::Replay(e.to_string()))
}

/// Draws the configuration stored in a counterexample witness.
pub fn witness_scene(w: &Witness) -> Result<Scene> {
    let plane = CurvedPlane::new(w.curvature, DEFAULT_EPS)?;
    let plane = &plane;
    let r = unit(plane);
    match w.id.as_str() {
        "playfair" => {
            let c: PlayfairConfig = parse(w)?;
            let (m1, m2) = playfair_lines(plane, &c.g, &c.a, c.delta)?;
            let (foot, p) = plane.perpendicular_foot(&c.a, &c.g)?;
            let mut s = Scene::new("Two lines through A missing g", p.max(r));
            s.line(plane, &c.g);
            s.line(plane, &m1);
            s.line(plane, &m2);
            s.construction(&c.a, &foot);
            s.point(&c.a, "A");
            Ok(s)
        }
        "khayyam" => {
            let c: KhayyamConfig = parse(w)?;
            let f = khayyam_figure(plane, c.base, c.legs)?;
            Ok(khayyam_scene(plane, &f, c.base.max(c.legs)))
        }
        "wallis" => {
            let c: WallisConfig = parse(w)?;
            let [l3, l1, l4] = wallis_lines(plane, c.a, c.b, c.position)?;
            let mut s = Scene::new("The transported line misses l1", c.position);
            s.line(plane, &l3);
            s.line(plane, &l1);
            s.line(plane, &l4);
            s.point(&plane.origin(), "A");
            s.point(&plane.polar(c.position, 0.0), "B");
            Ok(s)
        }
        "simson" => {
            let c: SimsonConfig = parse(w)?;
            let cp = plane.common_perpendicular(&c.g1, &c.g2)?;
            let along = plane.geodesic(cp.foot_on_first, plane.tangent_at_point(&c.g1, &cp.foot_on_first))?;
            let mut s = Scene::new("Distance to g2 falls then rises", r);
            s.line(plane, &c.g1);
            s.line(plane, &c.g2);
            for &o in &c.offsets {
                let p = plane.point_at(&along, o);
                let (foot, _) = plane.perpendicular_foot(&p, &c.g2)?;
                s.construction(&p, &foot);
            }
            Ok(s)
        }
        "circumcircle" => {
            let c: CircumcircleConfig = parse(w)?;
            let [p, q, t] = c.points;
            let mut s = Scene::new("Perpendicular bisectors that never meet", plane.distance(&p, &t));
            s.polygon(&[p, q, t]);
            for (u, v) in [(p, q), (q, t), (t, p)] {
                let b = perpendicular_bisector(plane, &u, &v)?;
                s.line(plane, &b);
            }
            for (pt, l) in [(p, "P"), (q, "Q"), (t, "R")] {
                s.point(&pt, l);
            }
            Ok(s)
        }
        "angle-interior" => {
            let c: AngleInteriorConfig = parse(w)?;
            let [s1, s2, line] = angle_interior_lines(plane, c.omega, c.p);
            let mut s = Scene::new("A line through P missing both sides", c.p);
            s.ray(&s1, 0.0, 12.0 * r, false);
            s.ray(&s2, 0.0, 12.0 * r, false);
            s.line(plane, &line);
            s.construction(&plane.origin(), &plane.polar(c.p, 0.0));
            s.point(&plane.origin(), "O");
            s.point(&plane.polar(c.p, 0.0), "P");
            Ok(s)
        }
        "equidistant" => {
            let c: EquidistantConfig = parse(w)?;
            let pts: Vec<Point> = [-c.half_span, 0.0, c.half_span]
                .iter()
                .map(|&t| plane.point_at(&plane.perpendicular_at(&c.g, t), c.d))
                .collect();
            let mut s = Scene::new("Equidistant points off the chord", c.d.max(c.half_span));
            s.line(plane, &c.g);
            let chord = plane.geodesic_through(&pts[0], &pts[2])?;
            s.line(plane, &chord);
            for (i, p) in pts.iter().enumerate() {
                s.construction(&plane.point_at(&c.g, [-c.half_span, 0.0, c.half_span][i]), p);
                s.point(p, "");
            }
            Ok(s)
        }
        "aaa" => {
            let c: counterexamples::AaaConfig = parse(w)?;
            let [alpha, beta, gamma] = c.angles;
            let t = counterexamples::aaa_rigidity(plane, alpha, beta, gamma)?;
            let copy = counterexamples::similar_copy(plane, &t, c.factor);
            let mut s = Scene::new("The triangle with angles fixed, and a scaled copy", t.sides[0]);
            s.polygon(&t.vertices);
            if let Ok(copy) = copy {
                for (i, p) in copy.vertices.iter().enumerate() {
                    s.construction(p, &copy.vertices[(i + 1) % 3]);
                }
            }
            Ok(s)
        }
        other => Err(Error::UnknownCounterexample(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_figure_renders_at_every_sign() {
        for k in [-1.0, 0.0, 1.0] {
            let p = CurvedPlane::with_curvature(k).unwrap();
            for id in FIGURE_IDS {
                let scene = figure_scene(&p, id, &BTreeMap::new()).unwrap();
                let svg = render_svg(&p, &scene).unwrap();
                assert_eq!(svg.matches("<g class=\"geodesic").count(), scene.geodesic_count(), "{id}");
            }
        }
    }

    #[test]
    fn unknown_figure_and_parameter() {
        let p = CurvedPlane::with_curvature(-1.0).unwrap();
        assert!(figure_scene(&p, "nope", &BTreeMap::new()).is_err());
        let params = BTreeMap::from([("zz".to_string(), 1.0)]);
        assert!(figure_scene(&p, "saccheri", &params).is_err());
    }

    #[test]
    fn far_side_of_sphere_is_dashed() {
        let p = CurvedPlane::with_curvature(1.0).unwrap();
        let mut s = Scene::new("equator", 1.0);
        s.line(&p, &p.ray_from_origin(0.0));
        let svg = render_svg(&p, &s).unwrap();
        assert!(svg.contains("class=\"hidden\""));
    }
}
