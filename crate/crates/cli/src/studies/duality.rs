use serde_json::json;

use perturbed_hardy::duality::{duality_identity, DualData};

use super::Context;
use crate::error::CliError;
use crate::report::{complex, real, Gate, StudyOutput, Table};

const STUDY: &str = "duality";

/// Default threshold of the identity residual.
pub const IDENTITY_GATE: f64 = 1e-6;
/// Default threshold for recovering the data from the double dual.
pub const INVOLUTION_GATE: f64 = 1e-8;

/// Dual data, the identity `T(0)·K^{α_{-1}}(0)·K^{α^τ}(0) = 1` and its vector form.
pub fn run(ctx: &Context) -> Result<StudyOutput, CliError> {
    let c = ctx.config;
    let tol = ctx.tol();
    let dual = DualData::from_space(&ctx.space, c.convention, tol).map_err(CliError::core("dual data"))?;
    let id = duality_identity(&ctx.space, &dual, c.degree, c.hankel, tol).map_err(CliError::core("duality identity"))?;
    let back = DualData::from_space(dual.target(), c.convention, tol).map_err(CliError::core("double dual"))?;

    let symbol = ctx.space.effective_symbol();
    let symbol_return = symbol
        .values()
        .iter()
        .zip(back.dual_symbol().values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let masses = ctx.space.effective_masses().map_err(CliError::core("masses"))?;
    let mass_return = masses
        .points()
        .iter()
        .zip(masses.weights())
        .zip(back.dual_masses().points().iter().zip(back.dual_masses().weights()))
        .map(|((p, w), (q, v))| (p - q).norm().max((w - v).abs() / w))
        .fold(0.0, f64::max);
    let involution = symbol_return.max(mass_return);

    let mut identity = Table::new("duality_identity", &["t_at_zero", "k_shifted", "k_dual", "product", "residual", "vector_residual"]);
    identity.push([id.t_at_zero, id.k_shifted, id.k_dual, id.product, id.residual, id.vector_residual].map(real).to_vec());

    let mut masses_table =
        Table::new("dual_masses", &["point_re", "point_im", "weight", "dual_point_re", "dual_point_im", "dual_weight", "inv_t_derivative_re", "inv_t_derivative_im"]);
    for (k, (p, w)) in masses.points().iter().zip(masses.weights()).enumerate() {
        let mut row = complex(*p).to_vec();
        row.push(real(*w));
        row.extend(complex(dual.dual_masses().points()[k]));
        row.push(real(dual.dual_masses().weights()[k]));
        row.extend(complex(dual.inv_t_derivatives()[k]));
        masses_table.push(row);
    }

    let file = identity.file_name();
    let gates = vec![
        Gate::below(STUDY, "identity_residual", id.residual, c.gate(IDENTITY_GATE), &file),
        Gate::below(STUDY, "vector_identity_residual", id.vector_residual, c.gate(IDENTITY_GATE), &file),
        Gate::below(STUDY, "double_dual_residual", involution, c.gate(INVOLUTION_GATE), &masses_table.file_name()),
    ];
    let summary = json!({
        "convention": c.convention,
        "provenance": dual.provenance(),
        "t_at_zero": id.t_at_zero,
        "k_shifted": id.k_shifted,
        "k_dual": id.k_dual,
        "identity_residual": id.residual,
        "vector_identity_residual": id.vector_residual,
        "modulus_residual": dual.modulus_residual(),
        "outer_reflection_residual": dual.outer_reflection_residual(),
        "double_dual_symbol_residual": symbol_return,
        "double_dual_mass_residual": mass_return,
        "degree": c.degree,
    });
    Ok(StudyOutput { study: STUDY.into(), tables: vec![identity, masses_table], summary, gates })
}
