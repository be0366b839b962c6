use nalgebra::DVector;
use serde::Serialize;

use crate::spaces::{BasisKind, GramMatrix};
use crate::{Error, Result, C64};

/// Coefficients of a reproducing kernel `k` in the monomial basis `z^0 ..= z^M`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelVector {
    pub coefficients: Vec<C64>,
    /// `‖k‖`.
    pub norm: f64,
    /// `k(0)`; equals `‖k‖²` for the kernel at the origin.
    pub value_at_zero: f64,
    /// `K(0) = k(0)/‖k‖`.
    pub normalized_at_zero: f64,
    pub point: C64,
    /// `k(ζ_0) = ‖k‖²`.
    pub value_at_point: f64,
    /// `max_p |(G k)_p - conj(ζ_0)^p|`.
    pub reproducing_residual: f64,
}

impl KernelVector {
    pub fn as_dvector(&self) -> DVector<C64> {
        DVector::from_column_slice(&self.coefficients)
    }

    /// `k(z)` by Horner's rule.
    pub fn eval(&self, z: C64) -> C64 {
        self.coefficients.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

fn analytic_degree(gram: &GramMatrix) -> Result<usize> {
    match gram.basis() {
        BasisKind::Analytic { degree } => Ok(degree),
        BasisKind::Laurent { .. } => Err(Error::WrongBasis),
    }
}

/// Kernel for evaluation at `point`: solves `G k = u` with `u_m = conj(point)^m`.
pub fn kernel_at_point(gram: &GramMatrix, point: C64) -> Result<KernelVector> {
    if point.norm() >= 1.0 {
        return Err(Error::RejectBoundary { modulus: point.norm() });
    }
    let degree = analytic_degree(gram)?;
    let u = DVector::from_fn(degree + 1, |m, _| point.conj().powi(m as i32));
    let k = gram.solve(&u);
    let reproducing_residual = (gram.entries() * &k - &u).iter().map(|c| c.norm()).fold(0.0, f64::max);
    let norm_sq = gram.quad_form(&k).max(0.0);
    let norm = norm_sq.sqrt();
    let value_at_zero = k[0].re;
    let coefficients: Vec<C64> = k.iter().copied().collect();
    let value_at_point = coefficients.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * point + c).re;
    Ok(KernelVector {
        coefficients,
        norm,
        value_at_zero,
        normalized_at_zero: value_at_zero / norm,
        point,
        value_at_point,
        reproducing_residual,
    })
}

/// Kernel at the origin; `K(0) = ‖k‖ = sqrt((G⁻¹)_{00})`.
pub fn kernel_at_origin(gram: &GramMatrix) -> Result<KernelVector> {
    kernel_at_point(gram, C64::new(0.0, 0.0))
}
