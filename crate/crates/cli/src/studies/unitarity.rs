use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use perturbed_hardy::circle::FourierCoeffs;
use perturbed_hardy::duality::{apply_tau, DualData, L2Metric, Side, TauVector};
use perturbed_hardy::{Result as CoreResult, C64};

use super::Context;
use crate::error::CliError;
use crate::report::{real, Gate, StudyOutput, Table};

const STUDY: &str = "unitarity";

pub const UNITARITY_GATE: f64 = 1e-8;

/// Seeded vectors of `L²(α)`: Laurent polynomials on `-band ..= band` and
/// mass values, with real and imaginary parts uniform in `[-1, 1]`.
pub fn random_vectors(metric: &L2Metric, count: usize, band: usize, seed: u64) -> CoreResult<Vec<TauVector>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = move || C64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
    (0..count)
        .map(|_| {
            let coeffs = FourierCoeffs::new(-(band as i64), (0..=2 * band).map(|_| draw()).collect());
            let masses = (0..metric.points().len()).map(|_| draw()).collect();
            metric.laurent(&coeffs, masses)
        })
        .collect()
}

/// Relative norm defect and involution defect of `τ` for one vector.
pub fn residuals(v: &TauVector, metric: &L2Metric, dual: &DualData, dual_metric: &L2Metric, back: &DualData) -> CoreResult<(f64, f64, f64)> {
    let n2 = metric.norm(v)?.powi(2);
    let image = apply_tau(v, dual)?;
    let unitarity = (dual_metric.norm(&image)?.powi(2) - n2).abs() / n2;
    let twice = apply_tau(&image, back)?;
    let involution = metric.norm(&twice.sub(v))? / n2.sqrt();
    Ok((n2.sqrt(), unitarity, involution))
}

pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let tol = ctx.tol();
    let wrap = CliError::core;
    let dual = DualData::from_space(&ctx.space, c.convention, tol).map_err(wrap("dual data"))?;
    let back = DualData::from_space(dual.target(), c.convention, tol).map_err(wrap("double dual"))?;
    let metric = L2Metric::new(&ctx.space, Side::Primal).map_err(wrap("metric"))?;
    let dual_metric = L2Metric::new(dual.target(), Side::Dual).map_err(wrap("dual metric"))?;
    let vectors = random_vectors(&metric, c.random_vectors, c.random_band, c.seed).map_err(wrap("random vectors"))?;
    let rows = vectors
        .par_iter()
        .map(|v| residuals(v, &metric, &dual, &dual_metric, &back))
        .collect::<CoreResult<Vec<_>>>()
        .map_err(wrap("tau"))?;

    let mut table = Table::new(STUDY, &["vector", "norm", "unitarity_residual", "involution_residual"]);
    for (i, (n, u, inv)) in rows.iter().enumerate() {
        table.push(vec![i.to_string(), real(*n), real(*u), real(*inv)]);
    }
    let max_u = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let max_i = rows.iter().map(|r| r.2).fold(0.0, f64::max);
    let file = table.file_name();
    let gates = vec![
        Gate::below(STUDY, "unitarity_residual", max_u, c.gate(UNITARITY_GATE), &file),
        Gate::below(STUDY, "involution_residual", max_i, c.gate(UNITARITY_GATE), &file),
    ];
    let summary = json!({
        "vectors": rows.len(),
        "band": c.random_band,
        "seed": c.seed,
        "max_unitarity_residual": max_u,
        "max_involution_residual": max_i,
    });
    Ok(StudyOutput { study: STUDY.into(), tables: vec![table], summary, gates })
}
