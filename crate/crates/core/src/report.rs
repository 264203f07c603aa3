//! Report documents and their canonical JSON form.
//!
//! Canonical means: object keys sorted, floats in the shortest form that
//! round-trips (at most 17 significant digits), two-space indentation and a
//! trailing newline. Identical inputs give byte-identical text.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::counterexamples::Witness;
use crate::error::{Error, Result};
use crate::propositions::{SamplingConfig, Verdict, CATALOGUE_VERSION};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub trials: usize,
    pub seed: u64,
    pub scale: f64,
    pub margin: f64,
    pub curvatures: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub catalogue_version: String,
    pub config: RunConfig,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<Witness>,
    /// Wall-clock seconds per check id. Only present when requested, since
    /// timings would break byte-identical output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl ReportDocument {
    pub fn new(cfg: &SamplingConfig, curvatures: &[f64], verdicts: Vec<Verdict>, witnesses: Vec<Witness>) -> Self {
        Self {
            tool_version: TOOL_VERSION.to_string(),
            catalogue_version: CATALOGUE_VERSION.to_string(),
            config: RunConfig {
                trials: cfg.trials,
                seed: cfg.seed,
                scale: cfg.scale,
                margin: cfg.margin,
                curvatures: curvatures.to_vec(),
            },
            verdicts,
            witnesses,
            timings: None,
        }
    }

    /// Checks whose outcome contradicts their expectation, as `id@K`.
    pub fn inconsistent(&self) -> Vec<String> {
        self.verdicts
            .iter()
            .filter(|v| !v.consistent)
            .map(|v| format!("{}@{}", v.check, v.curvature))
            .collect()
    }
}

/// Serializes any value canonically.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // Going through `Value` sorts every object's keys.
    let v = serde_json::to_value(value).map_err(|e| Error::Replay(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Replay(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Unordered {
        zeta: f64,
        alpha: f64,
        mid: Vec<f64>,
    }

    #[test]
    fn keys_are_sorted_and_floats_round_trip() {
        let s = to_canonical_json(&Unordered {
            zeta: 0.1 + 0.2,
            alpha: 1.0 / 3.0,
            mid: vec![1e-300, -0.0, 5.0],
        })
        .unwrap();
        let alpha = s.find("alpha").unwrap();
        let mid = s.find("mid").unwrap();
        let zeta = s.find("zeta").unwrap();
        assert!(alpha < mid && mid < zeta);
        assert!(s.contains("0.30000000000000004"));
        assert!(s.contains("0.3333333333333333"));
        let back: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["zeta"].as_f64().unwrap(), 0.1 + 0.2);
        assert!(s.ends_with("}\n"));
    }

    #[test]
    fn non_finite_floats_become_null() {
        let s = to_canonical_json(&vec![f64::NEG_INFINITY]).unwrap();
        assert!(s.contains("null"));
    }
}
