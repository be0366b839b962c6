use serde_json::json;

use perturbed_hardy::duality::{theorem_check, DualData};

use super::Context;
use crate::error::CliError;
use crate::report::{real, Gate, StudyOutput, Table};

const STUDY: &str = "theorem";

/// Default threshold of the membership and converse residuals.
pub const THEOREM_GATE: f64 = 1e-6;

/// τ-images of the complement of the analytic polynomials, checked for `Ĥ²(α^τ)` membership.
pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let dual = DualData::from_space(&ctx.space, c.convention, ctx.tol()).map_err(CliError::core("dual data"))?;
    let r = theorem_check(&ctx.space, &dual, c.half_band, c.hankel, ctx.tol()).map_err(CliError::core("theorem check"))?;
    let mut table = Table::new(
        STUDY,
        &[
            "half_band", "complement_dim", "max_antianalytic", "max_mass_mismatch", "membership_residual",
            "unitarity_residual", "complement_orthogonality", "converse_residual",
        ],
    );
    let mut row = vec![r.half_band.to_string(), r.complement_dim.to_string()];
    row.extend(
        [r.max_antianalytic, r.max_mass_mismatch, r.membership_residual, r.unitarity_residual, r.complement_orthogonality, r.converse_residual]
            .map(real),
    );
    table.push(row);
    let file = table.file_name();
    let gate = c.gate(THEOREM_GATE);
    let gates = vec![
        Gate::below(STUDY, "membership_residual", r.membership_residual, gate, &file),
        Gate::below(STUDY, "converse_residual", r.converse_residual, gate, &file),
    ];
    let summary = serde_json::to_value(&r).unwrap_or_else(|_| json!(null));
    Ok(StudyOutput { study: STUDY.into(), tables: vec![table], summary, gates })
}
