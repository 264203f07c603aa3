//! WebAssembly bindings for the browser demo in `www/`.
//!
//! The exported functions wrap plain Rust functions of the same name with a
//! `_impl` suffix, which are what the native tests call.

use std::collections::BTreeMap;

use parallax_core::render::{figure_scene, render_svg};
use parallax_core::table::{to_csv, trig_table};
use parallax_core::{trig, CurvedPlane};
use wasm_bindgen::prelude::*;

fn parse_params(params: &str) -> Result<BTreeMap<String, f64>, String> {
    params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (name, value) = pair.split_once('=').ok_or(format!("{pair:?} is not name=value"))?;
            let value = value.trim().parse::<f64>().map_err(|e| format!("{name}: {e}"))?;
            Ok((name.trim().to_string(), value))
        })
        .collect()
}

pub fn render_figure_impl(id: &str, k: f64, params: &str) -> Result<String, String> {
    let plane = CurvedPlane::with_curvature(k).map_err(|e| e.to_string())?;
    let scene = figure_scene(&plane, id, &parse_params(params)?).map_err(|e| e.to_string())?;
    render_svg(&plane, &scene).map_err(|e| e.to_string())
}

pub fn angle_of_parallelism_impl(k: f64, p: f64) -> Result<f64, String> {
    let plane = CurvedPlane::with_curvature(k).map_err(|e| e.to_string())?;
    trig::angle_of_parallelism(&plane, p).map_err(|e| e.to_string())
}

pub fn trig_table_impl(k: f64, max: f64, step: f64) -> Result<String, String> {
    let plane = CurvedPlane::with_curvature(k).map_err(|e| e.to_string())?;
    Ok(to_csv(&trig_table(&plane, max, step).map_err(|e| e.to_string())?))
}

/// SVG for a figure id; `params` is a comma separated list of `name=value`.
#[wasm_bindgen]
pub fn render_figure(id: &str, k: f64, params: &str) -> Result<String, JsError> {
    render_figure_impl(id, k, params).map_err(|e| JsError::new(&e))
}

/// Angle of parallelism in radians for distance `p` at curvature `k < 0`.
#[wasm_bindgen]
pub fn angle_of_parallelism(k: f64, p: f64) -> Result<f64, JsError> {
    angle_of_parallelism_impl(k, p).map_err(|e| JsError::new(&e))
}

/// CSV trigonometric table, as written by `parallax trig-table`.
#[wasm_bindgen]
pub fn trig_table_csv(k: f64, max: f64, step: f64) -> Result<String, JsError> {
    trig_table_impl(k, max, step).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_renders() {
        let svg = render_figure_impl("lambert-quad", -1.0, "a=0.5, b=0.5").unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(render_figure_impl("lambert-quad", -1.0, "a").is_err());
        assert!(render_figure_impl("nope", -1.0, "").is_err());
    }

    #[test]
    fn parallelism() {
        let a = angle_of_parallelism_impl(-1.0, (1.0 + 2f64.sqrt()).ln()).unwrap();
        assert!((a - std::f64::consts::FRAC_PI_4).abs() < 1e-14);
        assert!(angle_of_parallelism_impl(0.0, 1.0).is_err());
    }

    #[test]
    fn table() {
        let csv = trig_table_impl(0.0, 1.0, 0.5).unwrap();
        assert_eq!(csv.lines().count(), 3);
        assert!(trig_table_impl(1.0, 3.0, 0.5).is_err());
    }
}
