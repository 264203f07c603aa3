//! Trigonometric tables that depend on the absolute size of the figure.
//!
//! For `K != 0` a ratio of sides in a right triangle depends on the side
//! itself, so a table would need a row for every length; for `K = 0` the
//! column is constant.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::figures::equilateral_angle;
use crate::plane::CurvedPlane;
use crate::trig::law_of_cosines;

pub const HEADER: &str = "side,opposite_ratio_at_right_angle,angle_sum_equilateral";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrigRow {
    pub side: f64,
    /// Leg over hypotenuse in the right isosceles triangle with legs `side`.
    pub opposite_ratio_at_right_angle: f64,
    /// Angle sum of the equilateral triangle with sides `side`.
    pub angle_sum_equilateral: f64,
}

/// Rows for `side = step, 2 step, ...` up to `max`.
pub fn trig_table(plane: &CurvedPlane, max: f64, step: f64) -> Result<Vec<TrigRow>> {
    if !(step.is_finite() && step > 0.0 && max.is_finite() && max > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need max > 0 and step > 0, got max {max}, step {step}"
        )));
    }
    if plane.curvature() > 0.0 && max >= plane.hemisphere_cap() {
        return Err(Error::InvalidParameter(format!(
            "max {max} must stay below the hemisphere cap {}",
            plane.hemisphere_cap()
        )));
    }
    let count = (max / step * (1.0 + 1e-12)).floor() as usize;
    if count == 0 {
        return Err(Error::InvalidParameter("step exceeds max".into()));
    }
    if count > 10_000_000 {
        return Err(Error::InvalidParameter(format!("{count} rows requested")));
    }
    (1..=count)
        .map(|i| {
            let side = i as f64 * step;
            let hyp = law_of_cosines(plane, side, side, FRAC_PI_2)?;
            Ok(TrigRow {
                side,
                opposite_ratio_at_right_angle: side / hyp,
                angle_sum_equilateral: 3.0 * equilateral_angle(plane, side)?,
            })
        })
        .collect()
}

/// CSV text with a header line; floats in shortest round-trip form.
pub fn to_csv(rows: &[TrigRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            r.side, r.opposite_ratio_at_right_angle, r.angle_sum_equilateral
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane(k: f64) -> CurvedPlane {
        CurvedPlane::with_curvature(k).unwrap()
    }

    #[test]
    fn flat_ratio_is_constant() {
        let rows = trig_table(&plane(0.0), 5.0, 0.25).unwrap();
        assert_eq!(rows.len(), 20);
        for r in &rows {
            assert!((r.opposite_ratio_at_right_angle - 0.5f64.sqrt()).abs() < 1e-12);
            assert!((r.angle_sum_equilateral - std::f64::consts::PI).abs() < 1e-12);
        }
    }

    #[test]
    fn curved_ratios_are_monotone() {
        let h = trig_table(&plane(-1.0), 3.0, 0.1).unwrap();
        assert!(h.windows(2).all(|w| w[1].opposite_ratio_at_right_angle < w[0].opposite_ratio_at_right_angle));
        let s = trig_table(&plane(1.0), 1.5, 0.1).unwrap();
        assert!(s.windows(2).all(|w| w[1].opposite_ratio_at_right_angle > w[0].opposite_ratio_at_right_angle));
    }

    #[test]
    fn invalid_ranges() {
        assert!(trig_table(&plane(0.0), 1.0, 0.0).is_err());
        assert!(trig_table(&plane(0.0), -1.0, 0.1).is_err());
        assert!(trig_table(&plane(0.0), 0.1, 1.0).is_err());
        assert!(trig_table(&plane(1.0), 1.6, 0.1).is_err());
    }

    #[test]
    fn csv_layout() {
        let csv = to_csv(&trig_table(&plane(0.0), 1.0, 0.5).unwrap());
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], HEADER);
        assert_eq!(lines.len(), 3);
        assert!(lines[2].starts_with("1,0.707106781186547"));
    }
}
