use serde_json::json;

use perturbed_hardy::kernels::orthonormal_system;

use super::Context;
use crate::error::CliError;
use crate::report::{complex, Gate, StudyOutput, Table};

const STUDY: &str = "orthonormal";

pub const ORTHONORMAL_GATE: f64 = 1e-7;

/// Gram matrix of `e_n = ζ^n K^{α_n}` over the configured range.
pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let [lo, hi] = c.orthonormal_range;
    let ns: Vec<i64> = (lo..=hi).collect();
    let sys = orthonormal_system(&ctx.space, &ns, c.degree, c.hankel, ctx.tol()).map_err(CliError::core("orthonormal system"))?;
    let mut table = Table::new(STUDY, &["n", "m", "gram_re", "gram_im"]);
    for (i, n) in ns.iter().enumerate() {
        for (j, m) in ns.iter().enumerate() {
            let mut row = vec![n.to_string(), m.to_string()];
            row.extend(complex(sys.gram[(i, j)]));
            table.push(row);
        }
    }
    let defect = sys.identity_defect();
    let gates = vec![Gate::below(STUDY, "identity_defect", defect, c.gate(ORTHONORMAL_GATE), &table.file_name())];
    let summary = json!({ "range": [lo, hi], "identity_defect": defect, "degree": c.degree });
    Ok(StudyOutput { study: STUDY.into(), tables: vec![table], summary, gates })
}
