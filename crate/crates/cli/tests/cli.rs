use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn parallax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parallax"))
        .args(args)
        .env_remove("PARALLAX_SEED")
        .output()
        .expect("run parallax")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_single_trial_at_flat() {
    let out = parallax(&["verify", "--k", "0", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["config"]["trials"], 1);
    assert_eq!(doc["config"]["seed"], 42);
    assert!(doc["witnesses"].as_array().unwrap().is_empty());
    assert!(doc.get("timings").is_none());
    assert!(doc["verdicts"].as_array().unwrap().iter().all(|v| v["curvature"] == 0.0));
}

#[test]
fn seed_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_parallax"))
        .args(["verify", "--k", "1", "--trials", "2", "--check", "LAM-15"])
        .env("PARALLAX_SEED", "99")
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["config"]["seed"], 99);
    let explicit = parallax(&["verify", "--k", "1", "--trials", "2", "--check", "LAM-15", "--seed", "99"]);
    assert_eq!(out.stdout, explicit.stdout);
}

#[test]
fn timings_are_opt_in() {
    let out = parallax(&["verify", "--k=-1", "--trials", "2", "--check", "LAM-73", "--check", "LAM-15", "--timings"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let t = doc["timings"].as_object().unwrap();
    assert_eq!(t.keys().collect::<Vec<_>>(), ["LAM-15", "LAM-73"]);
    assert_eq!(doc["witnesses"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/report.json");
    let out = parallax(&["verify", "--k", "0", "--trials", "1", "--out", path(&missing)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(parallax(&["verify", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(parallax(&["verify", "--check", "LAM-999", "--trials", "1"]).status.code(), Some(2));
    assert_eq!(parallax(&["verify", "--k", "abc"]).status.code(), Some(2));
    assert_eq!(parallax(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn figures_render_to_svg() {
    let dir = tempfile::tempdir().unwrap();
    for (id, k, params) in [
        ("lambert-quad", "-1", "a=0.5,b=0.5"),
        ("saccheri", "0", "base=2,leg=1"),
        ("fig8", "1", "h=0.5,spacing=0.2"),
        ("wallis", "-1", ""),
    ] {
        let file = dir.path().join(format!("{id}.svg"));
        let mut args = vec!["figure", "--id", id, "--k", k, "--out", path(&file)];
        if !params.is_empty() {
            args.extend(["--params", params]);
        }
        let out = parallax(&args);
        assert_eq!(out.status.code(), Some(0), "{id}: {}", String::from_utf8_lossy(&out.stderr));
        let svg = fs::read_to_string(&file).unwrap();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }
    assert_eq!(parallax(&["figure", "--id", "nope"]).status.code(), Some(2));
    assert_eq!(parallax(&["figure", "--id", "saccheri", "--params", "base"]).status.code(), Some(2));
}

#[test]
fn counterexamples_write_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("w.json");
    let svg = dir.path().join("w.svg");
    let out = parallax(&["counterexample", "--id", "playfair", "--out", path(&json), "--svg", path(&svg)]);
    assert_eq!(out.status.code(), Some(0));
    let w: Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(w["id"], "playfair");
    assert!(w["margin"].as_f64().unwrap() > 0.0);
    // g and the two lines through A, plus the perpendicular from A.
    assert_eq!(fs::read_to_string(&svg).unwrap().matches("<g class=\"geodesic").count(), 4);

    let out = parallax(&["counterexample", "--id", "khayyam"]);
    assert_eq!(out.status.code(), Some(0));
    let w: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(w["margin"].as_f64().unwrap() > 0.1);

    assert_eq!(parallax(&["counterexample", "--id", "euclid"]).status.code(), Some(2));
    assert_eq!(parallax(&["counterexample", "--id", "khayyam", "--k", "0"]).status.code(), Some(1));
}

#[test]
fn trig_tables() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for f in [&a, &b] {
        let out = parallax(&["trig-table", "--k", "-1", "--max", "2", "--step", "0.25", "--out", path(f)]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = fs::read(&a).unwrap();
    assert_eq!(text, fs::read(&b).unwrap());
    let text = String::from_utf8(text).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("side,opposite_ratio_at_right_angle,angle_sum_equilateral"));
    assert_eq!(lines.count(), 8);

    let flat = parallax(&["trig-table", "--k", "0", "--max", "1", "--step", "0.1"]);
    let ratios: Vec<f64> = String::from_utf8(flat.stdout)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(ratios.len(), 10);
    assert!(ratios.iter().all(|r| (r - ratios[0]).abs() < 1e-12));

    assert_eq!(parallax(&["trig-table", "--k", "1", "--max", "2", "--step", "0.1"]).status.code(), Some(2));
    assert_eq!(parallax(&["trig-table", "--k", "0", "--max", "1", "--step", "0"]).status.code(), Some(2));
}
