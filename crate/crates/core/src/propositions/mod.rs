//! Numerical verification of the propositions of the theory of parallels.
//!
//! Each proposition is a [`Check`]: it samples a configuration from a seeded
//! stream, builds the figure and returns a signed slack that is positive
//! exactly when the proposition held in that trial. Configurations are plain
//! serde data, so the worst one can be stored in a report and replayed.

mod catalogue;
pub use catalogue::{classify, fan_area, Hypothesis};
pub mod sampling;

use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::plane::CurvedPlane;

pub use sampling::SamplingConfig;

/// Bumped whenever a check's sampling or slack changes.
pub const CATALOGUE_VERSION: &str = "1";

/// What the theory predicts for a check in one sign of curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    Fails,
    /// Exploratory: the outcome is reported, not predicted.
    Probe,
}

/// Expected outcome per sign of `K`; `None` where the check has no meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Regime {
    pub negative: Option<Expectation>,
    pub flat: Option<Expectation>,
    pub positive: Option<Expectation>,
}

impl Regime {
    pub const fn new(
        negative: Option<Expectation>,
        flat: Option<Expectation>,
        positive: Option<Expectation>,
    ) -> Self {
        Self {
            negative,
            flat,
            positive,
        }
    }

    pub fn at(&self, k: f64) -> Option<Expectation> {
        if k < 0.0 {
            self.negative
        } else if k > 0.0 {
            self.positive
        } else {
            self.flat
        }
    }
}

/// The result of evaluating one configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    /// Positive when the proposition held.
    pub slack: f64,
    /// Measured quantities behind the slack.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

impl Outcome {
    pub fn new(slack: f64) -> Self {
        Self {
            slack,
            details: Value::Null,
        }
    }

    pub fn with(slack: f64, details: Value) -> Self {
        Self { slack, details }
    }
}

/// The worst trial of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialWitness {
    pub trial: usize,
    pub config: Value,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub curvature: f64,
    pub expectation: Expectation,
    /// Whether the proposition held in every trial.
    pub holds: bool,
    pub trials: usize,
    pub failures: usize,
    /// Smallest slack over all trials.
    pub min_margin: f64,
    pub witness: TrialWitness,
    /// Whether the outcome agrees with the expectation (probes always do).
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A proposition with a typed configuration.
pub trait Check: Sync {
    type Config: Serialize + DeserializeOwned;

    fn id(&self) -> &'static str;
    fn claim(&self) -> &'static str;
    fn regime(&self) -> Regime;
    fn sample(
        &self,
        plane: &CurvedPlane,
        cfg: &SamplingConfig,
        rng: &mut ChaCha8Rng,
    ) -> Result<Self::Config>;
    fn evaluate(&self, plane: &CurvedPlane, config: &Self::Config) -> Result<Outcome>;

    /// A one-line summary of the run, for probes and for regimes where the
    /// outcome needs interpretation.
    fn note(&self, _plane: &CurvedPlane, _verdict: &Verdict) -> Option<String> {
        None
    }
}

/// Object-safe view of a [`Check`].
pub trait Proposition: Sync {
    fn id(&self) -> &'static str;
    fn claim(&self) -> &'static str;
    fn regime(&self) -> Regime;
    fn run(&self, plane: &CurvedPlane, cfg: &SamplingConfig) -> Result<Verdict>;
    fn replay(&self, plane: &CurvedPlane, config: &Value) -> Result<Outcome>;
}

fn failed_outcome(e: &Error) -> Outcome {
    Outcome::with(f64::NEG_INFINITY, Value::String(e.to_string()))
}

impl<C: Check> Proposition for C {
    fn id(&self) -> &'static str {
        Check::id(self)
    }

    fn claim(&self) -> &'static str {
        Check::claim(self)
    }

    fn regime(&self) -> Regime {
        Check::regime(self)
    }

    fn run(&self, plane: &CurvedPlane, cfg: &SamplingConfig) -> Result<Verdict> {
        cfg.validate()?;
        let k = plane.curvature();
        let expectation = Check::regime(self).at(k).ok_or(Error::WrongGeometry {
            required: describe_regime(&Check::regime(self)),
            curvature: k,
        })?;
        let id = Check::id(self);
        let mut failures = 0;
        let mut worst: Option<TrialWitness> = None;
        for trial in 0..cfg.trials {
            let mut rng = sampling::trial_rng(cfg.seed, id, trial);
            let config = self.sample(plane, cfg, &mut rng)?;
            // A construction that breaks down counts against the proposition.
            let outcome = self
                .evaluate(plane, &config)
                .unwrap_or_else(|e| failed_outcome(&e));
            if !(outcome.slack > 0.0) {
                failures += 1;
            }
            if worst
                .as_ref()
                .is_none_or(|w| outcome.slack < w.outcome.slack)
            {
                let config = serde_json::to_value(&config)
                    .map_err(|e| Error::Replay(e.to_string()))?;
                worst = Some(TrialWitness {
                    trial,
                    config,
                    outcome,
                });
            }
        }
        let witness = worst.expect("at least one trial");
        let holds = failures == 0;
        let consistent = match expectation {
            Expectation::Holds => holds,
            Expectation::Fails => !holds,
            Expectation::Probe => true,
        };
        let mut verdict = Verdict {
            check: id.to_string(),
            curvature: k,
            expectation,
            holds,
            trials: cfg.trials,
            failures,
            min_margin: witness.outcome.slack,
            witness,
            consistent,
            note: None,
        };
        verdict.note = self.note(plane, &verdict);
        Ok(verdict)
    }

    fn replay(&self, plane: &CurvedPlane, config: &Value) -> Result<Outcome> {
        let config: C::Config =
            serde_json::from_value(config.clone()).map_err(|e| Error::Replay(e.to_string()))?;
        self.evaluate(plane, &config)
    }
}

fn describe_regime(r: &Regime) -> &'static str {
    match (r.negative.is_some(), r.flat.is_some(), r.positive.is_some()) {
        (true, false, false) => "K < 0",
        (false, false, true) => "K > 0",
        (false, true, false) => "K = 0",
        (true, true, false) => "K <= 0",
        (false, true, true) => "K >= 0",
        (true, false, true) => "K != 0",
        _ => "any K",
    }
}

/// Every check, in catalogue order.
pub fn catalogue() -> &'static [&'static dyn Proposition] {
    catalogue::ALL
}

pub fn lookup(id: &str) -> Result<&'static dyn Proposition> {
    catalogue()
        .iter()
        .copied()
        .find(|c| c.id() == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

pub fn run_check(id: &str, plane: &CurvedPlane, cfg: &SamplingConfig) -> Result<Verdict> {
    lookup(id)?.run(plane, cfg)
}

/// Re-evaluates a stored witness configuration.
pub fn replay(id: &str, plane: &CurvedPlane, config: &Value) -> Result<Outcome> {
    lookup(id)?.replay(plane, config)
}

/// Runs every applicable check for each curvature.
///
/// Verdicts are ordered by check id, then by curvature. Planes are built with
/// `eps`.
pub fn run_suite(
    curvatures: &[f64],
    eps: f64,
    cfg: &SamplingConfig,
    ids: Option<&[String]>,
) -> Result<Vec<Verdict>> {
    cfg.validate()?;
    let mut ks = curvatures.to_vec();
    ks.sort_by(f64::total_cmp);
    ks.dedup();
    let mut checks: Vec<&'static dyn Proposition> = match ids {
        Some(ids) => ids.iter().map(|id| lookup(id)).collect::<Result<_>>()?,
        None => catalogue().to_vec(),
    };
    checks.sort_by_key(|c| c.id());
    checks.dedup_by_key(|c| c.id());
    let mut jobs = Vec::new();
    for c in &checks {
        for &k in &ks {
            if c.regime().at(k).is_some() {
                jobs.push((*c, CurvedPlane::new(k, eps)?));
            }
        }
    }
    run_jobs(&jobs, cfg)
}

#[cfg(not(feature = "parallel"))]
fn run_jobs(
    jobs: &[(&'static dyn Proposition, CurvedPlane)],
    cfg: &SamplingConfig,
) -> Result<Vec<Verdict>> {
    jobs.iter().map(|(c, p)| c.run(p, cfg)).collect()
}

#[cfg(feature = "parallel")]
fn run_jobs(
    jobs: &[(&'static dyn Proposition, CurvedPlane)],
    cfg: &SamplingConfig,
) -> Result<Vec<Verdict>> {
    use rayon::prelude::*;
    jobs.par_iter().map(|(c, p)| c.run(p, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_ids_are_unique_and_sorted_in_suite() {
        let mut ids: Vec<_> = catalogue().iter().map(|c| c.id()).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn unknown_check_is_reported() {
        let p = CurvedPlane::with_curvature(-1.0).unwrap();
        assert_eq!(
            run_check("LAM-999", &p, &SamplingConfig::default()),
            Err(Error::UnknownCheck("LAM-999".into()))
        );
    }

    #[test]
    fn inapplicable_curvature_is_rejected() {
        let p = CurvedPlane::with_curvature(1.0).unwrap();
        let r = run_check("LAM-73", &p, &SamplingConfig::default());
        assert!(matches!(r, Err(Error::WrongGeometry { .. })));
    }

    #[test]
    fn regime_lookup() {
        let r = Regime::new(Some(Expectation::Fails), Some(Expectation::Holds), None);
        assert_eq!(r.at(-0.5), Some(Expectation::Fails));
        assert_eq!(r.at(0.0), Some(Expectation::Holds));
        assert_eq!(r.at(2.0), None);
    }
}
