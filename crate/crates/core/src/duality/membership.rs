use serde::Serialize;

use super::TauVector;
use crate::circle::{build_outer, OuterData};
use crate::spaces::SpaceData;
use crate::{Error, Result, Tolerances, C64};

/// Residuals of the conditions `g = T_e f1 ∈ H²` and `f(ζ_k) = g(ζ_k)/T_e(ζ_k)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HatMembershipReport {
    /// `‖P_-(T_e f1)‖`.
    pub antianalytic_residual: f64,
    /// `max_k |f(ζ_k) - g(ζ_k)/T_e(ζ_k)|`.
    pub mass_mismatch: f64,
    pub holds: bool,
}

/// Precomputed outer function and points of a space, reused across many vectors.
#[derive(Debug, Clone)]
pub struct HatChecker {
    outer: OuterData,
    points: Vec<C64>,
    outer_at_points: Vec<C64>,
    tol: f64,
}

impl HatChecker {
    pub fn new(space: &SpaceData, tol: &Tolerances) -> Result<Self> {
        let outer = build_outer(&space.effective_symbol(), tol)?;
        let points = space.kept_masses().points().to_vec();
        let outer_at_points = points.iter().map(|&z| outer.eval(z)).collect();
        Ok(Self { outer, points, outer_at_points, tol: tol.hat })
    }

    pub fn check(&self, vector: &TauVector) -> Result<HatMembershipReport> {
        let grid = self.outer.grid();
        grid.check_len(vector.f1.len())?;
        if vector.mass_values.len() != self.points.len() {
            return Err(Error::GridMismatch { expected: self.points.len(), found: vector.mass_values.len() });
        }
        let g: Vec<C64> = self.outer.values().iter().zip(&vector.f1).map(|(t, f)| t * f).collect();
        let coeffs = grid.forward(&g);
        let antianalytic_residual = coeffs.antianalytic_norm();
        let mass_mismatch = self
            .points
            .iter()
            .zip(&self.outer_at_points)
            .zip(&vector.mass_values)
            .map(|((&z, te), f)| (f - coeffs.eval_analytic(z) / te).norm())
            .fold(0.0, f64::max);
        let holds = antianalytic_residual < self.tol && mass_mismatch < self.tol;
        Ok(HatMembershipReport { antianalytic_residual, mass_mismatch, holds })
    }
}

pub fn check_hat_membership(vector: &TauVector, space: &SpaceData, tol: &Tolerances) -> Result<HatMembershipReport> {
    HatChecker::new(space, tol)?.check(vector)
}
