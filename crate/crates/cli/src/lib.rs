//! Batch runner for perturbed Hardy space experiments: reads a JSON
//! configuration, runs the requested studies and writes CSV tables plus a
//! versioned `summary.json`.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

pub mod config;
pub mod error;
pub mod report;
pub mod studies;

pub use config::{ExperimentConfig, Overrides, StudyKind};
pub use error::{exit, CliError};
pub use report::{Gate, RunReport, StudyOutput, Table};

use studies::{run_study, Context};

/// Default output directory when neither the config nor the command line names one.
pub const DEFAULT_OUT: &str = "phardy-out";

/// Runs every requested study; independent studies run concurrently and are
/// reported in the order they were requested.
pub fn execute(config: &ExperimentConfig, base_dir: &Path) -> Result<RunReport, CliError> {
    let ctx = Context::new(config, base_dir)?;
    let mut kinds = config.studies.clone();
    let mut seen = std::collections::BTreeSet::new();
    kinds.retain(|k| seen.insert(*k));
    let results = kinds
        .par_iter()
        .map(|&kind| {
            let start = Instant::now();
            let out = run_study(kind, &ctx);
            log::info!("{} finished in {:.3} s", kind.name(), start.elapsed().as_secs_f64());
            out.map(|o| (o, start.elapsed().as_secs_f64()))
        })
        .collect::<Vec<_>>();
    let mut studies = Vec::with_capacity(results.len());
    let mut timings = Vec::with_capacity(results.len());
    for r in results {
        let (out, secs) = r?;
        timings.push((out.study.clone(), secs));
        studies.push(out);
    }
    let header = json!({
        "tool": "phardy",
        "cli_version": env!("CARGO_PKG_VERSION"),
        "library_version": perturbed_hardy::VERSION,
        "name": config.name,
        "grid": config.grid,
        "degree": config.degree,
        "hankel": config.hankel,
        "half_band": config.half_band,
        "convention": config.convention,
        "convention_rule": config.convention.describe(),
        "tolerances": config.tolerances,
        "tol_gate": config.tol_gate,
        "seed": config.seed,
        "studies": kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
    });
    Ok(RunReport { header, studies, timings })
}

/// Loads `path`, applies `overrides`, runs and writes the report.
/// Returns the report and the directory it was written to.
pub fn run_file(path: &Path, overrides: &Overrides) -> Result<(RunReport, PathBuf), CliError> {
    let (mut config, base) = ExperimentConfig::load(path)?;
    config.apply(overrides);
    let report = execute(&config, &base)?;
    let out = config.out.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_OUT));
    report.write(&out)?;
    Ok((report, out))
}

/// Exit code for a finished run: [`exit::OK`] iff every gate passed.
pub fn exit_code(report: &RunReport) -> i32 {
    if report.all_pass() {
        exit::OK
    } else {
        exit::GATE
    }
}
