use serde::Serialize;

use super::{apply_tau, DualData, L2Metric, Side};
use crate::circle::FourierCoeffs;
use crate::kernels::kernel_at_origin;
use crate::spaces::{build_gram_analytic, SpaceData};
use crate::{Result, Tolerances, C64};

/// `T(0)·K^{α_{-1}}(0)·K^{α^τ}(0)` and the vector form `τ(ζ^{-1} K^{α_{-1}}) = K^{α^τ}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub t_at_zero: f64,
    /// `K^{α_{-1}}(0)`.
    pub k_shifted: f64,
    /// `K^{α^τ}(0)`.
    pub k_dual: f64,
    pub product: f64,
    /// `|product - 1|`.
    pub residual: f64,
    /// `‖τ(ζ^{-1} K^{α_{-1}}) - K^{α^τ}‖` in `L²(α^τ)`.
    pub vector_residual: f64,
}

/// Both kernels on `z^0 ..= z^degree`. `dual` must have been built from `space`.
pub fn duality_identity(
    space: &SpaceData,
    dual: &DualData,
    degree: usize,
    hankel: Option<usize>,
    tol: &Tolerances,
) -> Result<IdentityReport> {
    let shifted = space.shifted(-1);
    let (g_shift, g_dual) = rayon::join(
        || build_gram_analytic(&shifted, degree, hankel, tol),
        || build_gram_analytic(dual.target(), degree, hankel, tol),
    );
    let k_shift = kernel_at_origin(&g_shift?)?;
    let k_dual = kernel_at_origin(&g_dual?)?;
    let t_at_zero = dual.t_at_zero();
    let product = t_at_zero * k_shift.normalized_at_zero * k_dual.normalized_at_zero;

    let metric = L2Metric::new(space, Side::Primal)?;
    let dual_metric = L2Metric::new(dual.target(), Side::Dual)?;
    let scale = C64::new(1.0 / k_shift.norm, 0.0);
    let lowered = FourierCoeffs::new(-1, k_shift.coefficients.iter().map(|c| c * scale).collect());
    let mass_values = metric.points().iter().map(|z| k_shift.eval(*z) * scale / z).collect();
    let source = metric.laurent(&lowered, mass_values)?;
    let image = apply_tau(&source, dual)?;
    let dual_scale = C64::new(1.0 / k_dual.norm, 0.0);
    let expected = dual_metric.embed(&FourierCoeffs::new(0, k_dual.coefficients.iter().map(|c| c * dual_scale).collect()))?;
    let vector_residual = dual_metric.norm(&image.sub(&expected))?;

    Ok(IdentityReport {
        t_at_zero,
        k_shifted: k_shift.normalized_at_zero,
        k_dual: k_dual.normalized_at_zero,
        product,
        residual: (product - 1.0).abs(),
        vector_residual,
    })
}
