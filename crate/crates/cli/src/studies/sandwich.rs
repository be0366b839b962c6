use rayon::prelude::*;
use serde_json::json;

use perturbed_hardy::kernels::{sandwich_report, SandwichReport};

use super::Context;
use crate::error::CliError;
use crate::report::{real, Gate, StudyOutput, Table};

const STUDY: &str = "sandwich";

fn opt(x: Option<f64>) -> String {
    x.map(real).unwrap_or_default()
}

/// Both regularization chains for every `(N, ρ, n)` combination.
pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let combos: Vec<(usize, f64, i64)> = c
        .sandwich_cutoffs()
        .into_iter()
        .flat_map(|n_cut| c.rho.iter().flat_map(move |&rho| c.sandwich_shifts.iter().map(move |&n| (n_cut, rho, n))))
        .collect();
    let reports = combos
        .par_iter()
        .map(|&(cut, rho, n)| sandwich_report(&ctx.space, cut, rho, n, c.degree, c.hankel, ctx.tol()))
        .collect::<Result<Vec<SandwichReport>, _>>()
        .map_err(CliError::core("sandwich"))?;

    let mut table = Table::new(
        STUDY,
        &[
            "cutoff", "rho", "n", "k_full", "k_truncated", "k_scaled", "k_both", "upper_margin", "lower_margin",
            "psd_truncated", "psd_scaled", "upper_bound", "upper_chain_margin", "lower_bound", "lower_chain_margin",
            "dual_truncated", "dual_both", "dual_scaled", "dual_upper_margin", "dual_lower_margin", "transported_residual",
        ],
    );
    for r in &reports {
        let mut row = vec![r.cutoff.to_string(), real(r.rho), r.n.to_string()];
        row.extend(
            [
                r.k_full, r.k_truncated, r.k_scaled, r.k_both, r.upper_margin, r.lower_margin, r.psd_truncated,
                r.psd_scaled, r.upper_bound, r.upper_chain_margin, r.lower_bound, r.lower_chain_margin,
            ]
            .map(real),
        );
        row.extend(
            [r.dual_truncated, r.dual_both, r.dual_scaled, r.dual_upper_margin, r.dual_lower_margin, r.transported_residual]
                .map(opt),
        );
        table.push(row);
    }

    let (worst_name, worst) = reports
        .iter()
        .map(|r| r.worst_margin())
        .fold(("none", f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
    let transported = reports.iter().filter_map(|r| r.transported_residual).fold(0.0, f64::max);
    let file = table.file_name();
    let gates = vec![
        Gate::at_least(STUDY, "worst_margin", worst, -c.tolerances.order, &file),
        Gate::below(STUDY, "transported_identity_residual", transported, c.gate(super::duality::IDENTITY_GATE), &file),
    ];
    let summary = json!({
        "combinations": reports.len(),
        "worst_margin": worst,
        "worst_margin_kind": worst_name,
        "transported_identity_residual": transported,
        "order_tolerance": c.tolerances.order,
    });
    Ok(StudyOutput { study: STUDY.into(), tables: vec![table], summary, gates })
}
