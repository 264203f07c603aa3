//! `parallax`: run the proposition catalogue, draw figures, emit
//! counterexample witnesses and trigonometric tables.
//!
//! Exit codes: 0 success, 1 a proposition or witness failed, 2 usage or I/O
//! error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use parallax_core::counterexamples::{self, Witness};
use parallax_core::plane::DEFAULT_EPS;
use parallax_core::propositions::{catalogue, run_suite, SamplingConfig};
use parallax_core::render::{figure_scene, render_svg, witness_scene};
use parallax_core::report::{to_canonical_json, ReportDocument};
use parallax_core::table::{to_csv, trig_table};
use parallax_core::{CurvedPlane, Error};

#[derive(Parser)]
#[command(name = "parallax", version, about = "Numerical theory of parallels in constant curvature")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the proposition catalogue and write a JSON report.
    Verify {
        /// Curvatures, comma separated.
        #[arg(long = "k", value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0,1")]
        curvatures: Vec<f64>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, env = "PARALLAX_SEED", default_value_t = 42)]
        seed: u64,
        /// Radius of the sampling disk.
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Minimum side and altitude of sampled figures.
        #[arg(long, default_value_t = 0.05)]
        margin: f64,
        #[arg(long, default_value_t = DEFAULT_EPS)]
        eps: f64,
        /// Restrict to these check ids (repeatable).
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Record wall-clock seconds per check (makes the report non-reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a figure as SVG.
    Figure {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        k: f64,
        /// `name=value` pairs, comma separated.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a counterexample witness and write it as JSON.
    Counterexample {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        k: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also draw the witness.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write a CSV table of size-dependent trigonometric quantities.
    TrigTable {
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
        #[arg(long)]
        max: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Exit 1: the listed items did not behave as expected.
    Checks(Vec<String>),
    /// Exit 2.
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(ids)) => {
            for id in ids {
                eprintln!("failed: {id}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Verify {
            curvatures,
            trials,
            seed,
            scale,
            margin,
            eps,
            checks,
            timings,
            out,
        } => verify(&curvatures, SamplingConfig::new(trials, seed, scale, margin)?, eps, checks, timings, out.as_deref()),
        Command::Figure { id, k, params, out } => {
            let plane = CurvedPlane::new(k, DEFAULT_EPS)?;
            let scene = figure_scene(&plane, &id, &parse_params(&params)?)?;
            emit(out.as_deref(), &render_svg(&plane, &scene)?)?;
            Ok(())
        }
        Command::Counterexample { id, k, out, svg } => {
            let plane = CurvedPlane::new(k, DEFAULT_EPS)?;
            let w = match counterexamples::generate(&id, &plane) {
                Ok(w) => w,
                Err(e @ Error::UnknownCounterexample(_)) => return Err(e.into()),
                Err(e) => return Err(Failure::Checks(vec![format!("{id}@{k}: {e}")])),
            };
            emit(out.as_deref(), &to_canonical_json(&w)?)?;
            if let Some(path) = svg {
                let scene = witness_scene(&w)?;
                emit(Some(&path), &render_svg(&plane, &scene)?)?;
            }
            if w.margin > 0.0 {
                Ok(())
            } else {
                Err(Failure::Checks(vec![format!("{id}@{k}: margin {}", w.margin)]))
            }
        }
        Command::TrigTable { k, max, step, out } => {
            let plane = CurvedPlane::new(k, DEFAULT_EPS)?;
            emit(out.as_deref(), &to_csv(&trig_table(&plane, max, step)?))?;
            Ok(())
        }
    }
}

fn parse_params(raw: &[String]) -> anyhow::Result<BTreeMap<String, f64>> {
    raw.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (name, value) = pair
                .split_once('=')
                .ok_or_else(|| anyhow!("parameter {pair:?} is not name=value"))?;
            let value: f64 = value
                .trim()
                .parse()
                .with_context(|| format!("parameter {name}: {value:?} is not a number"))?;
            Ok((name.trim().to_string(), value))
        })
        .collect()
}

fn verify(
    curvatures: &[f64],
    cfg: SamplingConfig,
    eps: f64,
    checks: Vec<String>,
    timings: bool,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if curvatures.is_empty() {
        return Err(anyhow!("--k needs at least one curvature").into());
    }
    if let Some(bad) = curvatures.iter().find(|k| !k.is_finite()) {
        return Err(anyhow!("curvature {bad} is not finite").into());
    }
    let ids = (!checks.is_empty()).then_some(checks.as_slice());

    let (verdicts, times) = if timings {
        let selected: Vec<String> = match ids {
            Some(ids) => ids.to_vec(),
            None => catalogue().iter().map(|c| c.id().to_string()).collect(),
        };
        let mut verdicts = Vec::new();
        let mut times = BTreeMap::new();
        for id in selected {
            let start = Instant::now();
            verdicts.extend(run_suite(curvatures, eps, &cfg, Some(std::slice::from_ref(&id)))?);
            times.insert(id, start.elapsed().as_secs_f64());
        }
        verdicts.sort_by(|a, b| a.check.cmp(&b.check).then(a.curvature.total_cmp(&b.curvature)));
        verdicts.dedup_by(|a, b| a.check == b.check && a.curvature == b.curvature);
        (verdicts, Some(times))
    } else {
        (run_suite(curvatures, eps, &cfg, ids)?, None)
    };

    let mut failed = Vec::new();
    let mut witnesses: Vec<Witness> = Vec::new();
    let mut ks: Vec<f64> = curvatures.iter().copied().filter(|&k| k < 0.0).collect();
    ks.sort_by(f64::total_cmp);
    ks.dedup();
    for k in ks {
        let plane = CurvedPlane::new(k, eps)?;
        for id in counterexamples::IDS {
            match counterexamples::generate(id, &plane) {
                Ok(w) => witnesses.push(w),
                Err(e) => failed.push(format!("counterexample {id}@{k}: {e}")),
            }
        }
    }

    let mut doc = ReportDocument::new(&cfg, curvatures, verdicts, witnesses);
    doc.timings = times;
    failed.splice(0..0, doc.inconsistent());
    emit(out, &to_canonical_json(&doc)?)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks(failed))
    }
}
