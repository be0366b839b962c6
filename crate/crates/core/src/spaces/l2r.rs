use serde::Serialize;

use crate::circle::{riesz_project_values, OuterData, Projection, SymbolData};
use crate::{Result, Tolerances, C64};

/// Diagnostics for a grid-sampled pair `(f1, f2)` against the description
/// `L²_R = {T_e f1 ∈ L², conj(T_e) f2 ∈ H²_-, R f1 + f2 ∈ H²}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct L2rReport {
    /// `‖P_-(R f1 + f2)‖`.
    pub analytic_defect: f64,
    /// `‖P_+(conj(T_e) f2)‖`.
    pub conj_outer_defect: f64,
    /// `‖f2 + P_-(R f1)‖`, the failure of `f1` to determine `f2`.
    pub reconstruction_residual: f64,
    pub holds: bool,
}

/// `-P_-(R f1)` on the grid.
pub fn canonical_second_component(symbol: &SymbolData, f1: &[C64]) -> Vec<C64> {
    let prod: Vec<C64> = symbol.values().iter().zip(f1).map(|(r, f)| r * f).collect();
    riesz_project_values(symbol.grid(), &prod, Projection::Antianalytic).into_iter().map(|v| -v).collect()
}

fn rms(values: &[C64]) -> f64 {
    (values.iter().map(|v| v.norm_sqr()).sum::<f64>() / values.len() as f64).sqrt()
}

pub fn check_l2r_membership(symbol: &SymbolData, outer: &OuterData, f1: &[C64], f2: &[C64], tol: &Tolerances) -> Result<L2rReport> {
    let grid = symbol.grid();
    grid.check_len(f1.len())?;
    grid.check_len(f2.len())?;
    grid.check_len(outer.values().len())?;
    let sum: Vec<C64> = symbol.values().iter().zip(f1).zip(f2).map(|((r, a), b)| r * a + b).collect();
    let analytic_defect = grid.forward(&sum).antianalytic_norm();
    let weighted: Vec<C64> = outer.values().iter().zip(f2).map(|(t, b)| t.conj() * b).collect();
    let conj_outer_defect = grid.forward(&weighted).analytic_norm();
    let canonical = canonical_second_component(symbol, f1);
    let diff: Vec<C64> = f2.iter().zip(&canonical).map(|(a, b)| a - b).collect();
    let reconstruction_residual = rms(&diff);
    let holds = analytic_defect < tol.l2r && conj_outer_defect < tol.l2r && reconstruction_residual < tol.l2r;
    Ok(L2rReport { analytic_defect, conj_outer_defect, reconstruction_residual, holds })
}
