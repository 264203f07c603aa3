//! Seeded sampling of figures.
//!
//! Every trial draws from its own ChaCha stream keyed by
//! `(seed, check id, trial index)`, so verdicts do not depend on the order
//! or the thread in which trials run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{CurvedPlane, Point};

/// Sampling parameters shared by every check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingConfig {
    pub trials: usize,
    pub seed: u64,
    /// Largest figure size (length).
    pub scale: f64,
    /// Degeneracy exclusion radius (length).
    pub margin: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 42,
            scale: 1.0,
            margin: 0.05,
        }
    }
}

impl SamplingConfig {
    pub fn new(trials: usize, seed: u64, scale: f64, margin: f64) -> Result<Self> {
        let cfg = Self {
            trials,
            seed,
            scale,
            margin,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        if !(self.margin.is_finite() && self.margin > 0.0) {
            return Err(Error::InvalidParameter("margin must be positive".into()));
        }
        if !(self.scale.is_finite() && self.scale > self.margin) {
            return Err(Error::InvalidParameter(
                "scale must exceed the margin".into(),
            ));
        }
        Ok(())
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01B3)
    })
}

/// The random stream of one trial.
pub fn trial_rng(seed: u64, check: &str, trial: usize) -> ChaCha8Rng {
    let key = splitmix64(seed ^ splitmix64(fnv1a(check) ^ splitmix64(trial as u64)));
    ChaCha8Rng::seed_from_u64(key)
}

pub fn uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

/// Radius of the sampling disk: `scale`, kept well inside a hemisphere.
pub fn disk_radius(plane: &CurvedPlane, cfg: &SamplingConfig) -> f64 {
    if plane.curvature() > 0.0 {
        cfg.scale.min(0.45 * plane.hemisphere_cap())
    } else {
        cfg.scale
    }
}

/// Upper bound for sampled lengths: `scale`, kept below a quarter circle.
pub fn length_cap(plane: &CurvedPlane, cfg: &SamplingConfig) -> f64 {
    if plane.curvature() > 0.0 {
        cfg.scale.min(0.9 * plane.hemisphere_cap())
    } else {
        cfg.scale
    }
}

/// A length in `[2 margin, cap]`.
pub fn length<R: Rng>(rng: &mut R, plane: &CurvedPlane, cfg: &SamplingConfig) -> f64 {
    uniform(rng, 2.0 * cfg.margin, length_cap(plane, cfg))
}

/// A point uniformly distributed by area in the geodesic disk of radius
/// `rho` about the origin.
pub fn point_in_disk<R: Rng>(rng: &mut R, plane: &CurvedPlane, rho: f64) -> Point {
    let k = plane.curvature();
    let u: f64 = rng.random();
    let theta = uniform(rng, 0.0, std::f64::consts::TAU);
    // Area of the disk of radius r is proportional to sin_k(r/2)^2.
    let r = 2.0 * crate::trig::asin_k(k, u.sqrt() * plane.sin_k(rho / 2.0));
    plane.polar(r, theta)
}

/// Three vertices in the sampling disk with sides at least `2 margin` and
/// altitudes at least `margin`.
pub fn triangle<R: Rng>(
    rng: &mut R,
    plane: &CurvedPlane,
    cfg: &SamplingConfig,
) -> Result<[Point; 3]> {
    let rho = disk_radius(plane, cfg);
    retry(rng, |rng| {
        let v = [0, 1, 2].map(|_| point_in_disk(rng, plane, rho));
        non_degenerate(plane, &v, cfg.margin).then_some(v)
    })
}

pub fn non_degenerate(plane: &CurvedPlane, v: &[Point; 3], margin: f64) -> bool {
    for i in 0..3 {
        let (p, q, r) = (&v[i], &v[(i + 1) % 3], &v[(i + 2) % 3]);
        if plane.distance(q, r) < 2.0 * margin {
            return false;
        }
        match plane.geodesic_through(q, r) {
            Ok(g) if plane.signed_distance(p, &g).abs() >= margin => {}
            _ => return false,
        }
    }
    true
}

/// Rejection sampling with a fixed attempt budget.
pub fn retry<R: Rng, T>(rng: &mut R, mut draw: impl FnMut(&mut R) -> Option<T>) -> Result<T> {
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        if let Some(v) = draw(rng) {
            return Ok(v);
        }
    }
    Err(Error::DegenerateInput(
        "sampling budget exhausted; scale too small for the margin".into(),
    ))
}
