use std::collections::BTreeMap;

use parallax_core::counterexamples::{generate, IDS};
use parallax_core::render::{figure_scene, render_svg, witness_scene, Scene, FIGURE_IDS, SAMPLES};
use parallax_core::CurvedPlane;

fn plane(k: f64) -> CurvedPlane {
    CurvedPlane::with_curvature(k).unwrap()
}

/// Parses the document and checks one group of at least `SAMPLES` segments
/// per drawn geodesic.
fn check(svg: &str, scene: &Scene) -> Vec<String> {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let groups: Vec<_> = root
        .descendants()
        .filter(|n| n.has_tag_name("g") && n.attribute("class").is_some_and(|c| c.starts_with("geodesic")))
        .collect();
    assert_eq!(groups.len(), scene.geodesic_count());
    for g in &groups {
        let points: usize = g
            .children()
            .filter(|n| n.has_tag_name("polyline"))
            .map(|n| n.attribute("points").unwrap().split(' ').count())
            .sum();
        assert!(points > SAMPLES, "{points} points");
    }
    root.descendants()
        .filter(|n| n.has_tag_name("text"))
        .map(|n| n.text().unwrap_or_default().to_string())
        .collect()
}

#[test]
fn figures_are_well_formed() {
    for k in [-1.0, 0.0, 1.0] {
        let p = plane(k);
        for id in FIGURE_IDS {
            let scene = figure_scene(&p, id, &BTreeMap::new()).unwrap();
            check(&render_svg(&p, &scene).unwrap(), &scene);
        }
    }
}

#[test]
fn lambert_quad_has_marks_and_letters() {
    let p = plane(-1.0);
    let params = BTreeMap::from([("a".to_string(), 0.5), ("b".to_string(), 0.5)]);
    let scene = figure_scene(&p, "lambert-quad", &params).unwrap();
    let svg = render_svg(&p, &scene).unwrap();
    let labels = check(&svg, &scene);
    assert_eq!(labels, ["A", "B", "C", "D"]);
    assert_eq!(svg.matches("class=\"mark\"").count(), 3);
    assert!(svg.contains("class=\"horizon\""));
}

#[test]
fn flat_rectangle_is_straight() {
    let p = plane(0.0);
    let params = BTreeMap::from([("base".to_string(), 2.0), ("leg".to_string(), 1.0)]);
    let scene = figure_scene(&p, "saccheri", &params).unwrap();
    let svg = render_svg(&p, &scene).unwrap();
    check(&svg, &scene);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let first = doc.descendants().find(|n| n.has_tag_name("polyline")).unwrap();
    let pts: Vec<(f64, f64)> = first
        .attribute("points")
        .unwrap()
        .split(' ')
        .map(|xy| {
            let (x, y) = xy.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    // The base AB is horizontal on the page.
    assert!(pts.iter().all(|&(_, y)| (y - pts[0].1).abs() < 1e-3));
    assert!(!svg.contains("class=\"horizon\""));
}

#[test]
fn sphere_fig8_is_orthographic() {
    let p = plane(1.0);
    let scene = figure_scene(&p, "fig8", &BTreeMap::new()).unwrap();
    let svg = render_svg(&p, &scene).unwrap();
    check(&svg, &scene);
    assert!(svg.contains("class=\"hidden\""));
}

#[test]
fn witnesses_are_drawable() {
    let h = plane(-1.0);
    for id in IDS {
        let w = generate(id, &h).unwrap();
        let scene = witness_scene(&w).unwrap();
        check(&render_svg(&h, &scene).unwrap(), &scene);
    }
}
