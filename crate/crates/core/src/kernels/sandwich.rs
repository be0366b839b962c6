use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use super::kernel_at_origin;
use crate::duality::{DualData, MassConvention};
use crate::spaces::{build_gram_analytic, SpaceData};
use crate::{Error, Result, Tolerances, C64};

/// Both regularization chains around `K^{α_n}(0)`.
///
/// Primal side, with `α^N` keeping the first `N` masses and `α^ρ` using `ρR`:
/// `K^{α^N_n}(0) ≥ K^{α_n}(0) ≥ K^{α^ρ_n}(0)`, together with the bounds
/// `T_e^ρ(0)/T_e(0) · K^{α^{N,ρ}_n}(0) ≥ K^{α^N_n}(0)` and
/// `K^{α^ρ_n}(0) ≥ B(0)/B^N(0) · K^{α^{N,ρ}_n}(0)`.
///
/// Dual side: `K^{(α^N)^τ_{-n-1}}(0) ≥ K^{(α^{N,ρ})^τ_{-n-1}}(0) ≥ K^{(α^ρ)^τ_{-n-1}}(0)`,
/// and for every variant `X` the transported identity `T^X(0)·K^{α^X_n}(0)·K^{(α^X)^τ_{-n-1}}(0) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub n: i64,
    pub cutoff: usize,
    pub rho: f64,
    pub k_full: f64,
    pub k_truncated: f64,
    pub k_scaled: f64,
    pub k_both: f64,
    /// `K^{α^N_n} - K^{α_n}`.
    pub upper_margin: f64,
    /// `K^{α_n} - K^{α^ρ_n}`.
    pub lower_margin: f64,
    /// Smallest eigenvalue of `G(α_n) - G(α^N_n)`.
    pub psd_truncated: f64,
    /// Smallest eigenvalue of `G(α^ρ_n) - G(α_n)`.
    pub psd_scaled: f64,
    pub upper_bound: f64,
    pub upper_chain_margin: f64,
    pub lower_bound: f64,
    pub lower_chain_margin: f64,
    pub dual_truncated: Option<f64>,
    pub dual_both: Option<f64>,
    pub dual_scaled: Option<f64>,
    pub dual_upper_margin: Option<f64>,
    pub dual_lower_margin: Option<f64>,
    /// Largest `|T^X(0)·K^{α^X_n}(0)·K^{(α^X)^τ_{-n-1}}(0) - 1|` over the four variants.
    pub transported_residual: Option<f64>,
}

impl SandwichReport {
    /// Every margin that must be nonnegative, with its name.
    pub fn margins(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![
            ("upper", self.upper_margin),
            ("lower", self.lower_margin),
            ("psd_truncated", self.psd_truncated),
            ("psd_scaled", self.psd_scaled),
            ("upper_chain", self.upper_chain_margin),
            ("lower_chain", self.lower_chain_margin),
        ];
        if let (Some(u), Some(l)) = (self.dual_upper_margin, self.dual_lower_margin) {
            out.push(("dual_upper", u));
            out.push(("dual_lower", l));
        }
        out
    }

    pub fn worst_margin(&self) -> (&'static str, f64) {
        self.margins().into_iter().fold(("none", f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a })
    }
}

fn min_eig(m: DMatrix<C64>) -> f64 {
    let h = (&m + m.adjoint()) * C64::new(0.5, 0.0);
    h.symmetric_eigenvalues().min()
}

struct Variant {
    k: f64,
    gram: DMatrix<C64>,
    te0: f64,
    b0: f64,
    dual_k: Option<f64>,
}

fn variant(base: &SpaceData, n: i64, degree: usize, hankel: Option<usize>, tol: &Tolerances) -> Result<Variant> {
    let gram = build_gram_analytic(&base.shifted(n), degree, hankel, tol)?;
    let k = kernel_at_origin(&gram)?.normalized_at_zero;
    let has_origin = base.kept_masses().has_origin();
    let dual = DualData::from_space(base, MassConvention::Unitary, tol)?;
    let b0 = dual.source_blaschke().value_at_zero();
    let te0 = dual.source_outer().value_at_zero();
    let dual_k = if has_origin {
        None
    } else {
        let g = build_gram_analytic(&dual.target().with_shift(-n - 1), degree, hankel, tol)?;
        Some(kernel_at_origin(&g)?.normalized_at_zero)
    };
    Ok(Variant { k, gram: gram.entries().clone(), te0, b0, dual_k })
}

/// Computes all margins without judging them.
pub fn sandwich_report(
    space: &SpaceData,
    cutoff: usize,
    rho: f64,
    n: i64,
    degree: usize,
    hankel: Option<usize>,
    tol: &Tolerances,
) -> Result<SandwichReport> {
    let bases = [
        space.clone(),
        space.with_cutoff(cutoff)?,
        space.with_rho(rho * space.rho())?,
        space.with_cutoff(cutoff)?.with_rho(rho * space.rho())?,
    ];
    let mut variants = bases
        .par_iter()
        .map(|b| variant(b, n, degree, hankel, tol))
        .collect::<Result<Vec<_>>>()?
        .into_iter();
    let (full, trunc, scaled, both) = (
        variants.next().unwrap(),
        variants.next().unwrap(),
        variants.next().unwrap(),
        variants.next().unwrap(),
    );

    let upper_bound = both.te0 / full.te0 * both.k;
    let lower_bound = full.b0 / trunc.b0 * both.k;
    let duals = (trunc.dual_k, both.dual_k, scaled.dual_k);
    let transported_residual = [&full, &trunc, &scaled, &both]
        .iter()
        .map(|v| v.dual_k.map(|d| (v.te0 / v.b0 * v.k * d - 1.0).abs()))
        .collect::<Option<Vec<f64>>>()
        .map(|r| r.into_iter().fold(0.0, f64::max));
    Ok(SandwichReport {
        n,
        cutoff,
        rho,
        k_full: full.k,
        k_truncated: trunc.k,
        k_scaled: scaled.k,
        k_both: both.k,
        upper_margin: trunc.k - full.k,
        lower_margin: full.k - scaled.k,
        psd_truncated: min_eig(&full.gram - &trunc.gram),
        psd_scaled: min_eig(&scaled.gram - &full.gram),
        upper_bound,
        upper_chain_margin: upper_bound - trunc.k,
        lower_bound,
        lower_chain_margin: scaled.k - lower_bound,
        dual_truncated: duals.0,
        dual_both: duals.1,
        dual_scaled: duals.2,
        dual_upper_margin: duals.0.zip(duals.1).map(|(a, b)| a - b),
        dual_lower_margin: duals.1.zip(duals.2).map(|(a, b)| a - b),
        transported_residual,
    })
}

/// [`sandwich_report`], failing with `OrderViolation` when a margin is below `-tol.order`.
pub fn sandwich_check(
    space: &SpaceData,
    cutoff: usize,
    rho: f64,
    n: i64,
    degree: usize,
    hankel: Option<usize>,
    tol: &Tolerances,
) -> Result<SandwichReport> {
    let report = sandwich_report(space, cutoff, rho, n, degree, hankel, tol)?;
    let (what, margin) = report.worst_margin();
    if margin < -tol.order {
        return Err(Error::OrderViolation { what: what.to_string(), margin });
    }
    Ok(report)
}
