use serde_json::json;

use perturbed_hardy::kernels::asymptotic_sweep;

use super::Context;
use crate::error::CliError;
use crate::report::{real, Gate, StudyOutput, Table};

const STUDY: &str = "asymptotics";

/// `n ↦ K^{α_n}(0)` over the configured range.
pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let [lo, hi] = c.n_range;
    let trace = asymptotic_sweep(&ctx.space, hi as usize, c.degree, c.hankel, c.conv_tol, ctx.tol())
        .map_err(CliError::core("asymptotic sweep"))?;
    let mut table = Table::new(STUDY, &["n", "kernel_at_zero", "distance_from_one", "min_eig", "hankel_tail_bound"]);
    for e in trace.entries.iter().filter(|e| e.n >= lo) {
        table.push(vec![e.n.to_string(), real(e.value), real((e.value - 1.0).abs()), real(e.min_eig), real(e.tail_bound)]);
    }
    let last = trace.entries.last().map(|e| (e.value - 1.0).abs()).unwrap_or(f64::NAN);
    let from = c.monotone_from.max(lo);
    let worst = trace.worst_tail_increase(from);
    let nondecreasing = trace.is_nondecreasing(c.tolerances.order);
    let all_positive = trace.entries.iter().all(|e| e.value > 0.0);
    let gates = vec![
        Gate::below(STUDY, "final_distance_from_one", last, c.conv_tol, &table.file_name()),
        Gate::flag(STUDY, "tail_monotone", trace.tail_monotone(from, c.tolerances.order), &table.file_name()),
        Gate::flag(STUDY, "values_positive", all_positive, &table.file_name()),
    ];
    let summary = json!({
        "n_range": [lo, hi],
        "degree": trace.degree,
        "hankel": trace.hankel,
        "grid": trace.grid_size,
        "conv_tol": c.conv_tol,
        "converged_at": trace.converged_at,
        "final_distance_from_one": last,
        "monotone_from": from,
        "worst_tail_increase": worst,
        "nondecreasing": nondecreasing,
    });
    Ok(StudyOutput { study: STUDY.into(), tables: vec![table], summary, gates })
}
