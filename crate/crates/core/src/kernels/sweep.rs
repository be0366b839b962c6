use rayon::prelude::*;
use serde::Serialize;

use super::kernel_at_origin;
use crate::spaces::{build_gram_analytic, SpaceData};
use crate::{Error, Result, Tolerances};

/// `K^α(0)` for the effective data of `space` on `z^0 ..= z^degree`.
pub fn kernel_value(space: &SpaceData, degree: usize, hankel: Option<usize>, tol: &Tolerances) -> Result<f64> {
    let gram = build_gram_analytic(space, degree, hankel, tol)?;
    Ok(kernel_at_origin(&gram)?.normalized_at_zero)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceEntry {
    pub n: i64,
    /// `K^{α_n}(0)`.
    pub value: f64,
    pub min_eig: f64,
    pub tail_bound: f64,
}

/// `n ↦ K^{α_n}(0)` for `n = 0 ..= n_max`, relative to the shift already present in the space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticTrace {
    pub entries: Vec<TraceEntry>,
    pub degree: usize,
    pub hankel: usize,
    pub grid_size: usize,
    pub conv_tol: f64,
    /// First `n` from which `|K - 1| < conv_tol` holds for three consecutive shifts.
    pub converged_at: Option<i64>,
}

impl AsymptoticTrace {
    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn value(&self, n: i64) -> Option<f64> {
        self.entries.iter().find(|e| e.n == n).map(|e| e.value)
    }

    /// Largest increase of `|K^{α_n}(0) - 1|` between consecutive `n ≥ from`;
    /// nonpositive when the tail is monotone.
    pub fn worst_tail_increase(&self, from: i64) -> f64 {
        let tail: Vec<f64> = self.entries.iter().filter(|e| e.n >= from).map(|e| (e.value - 1.0).abs()).collect();
        tail.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn tail_monotone(&self, from: i64, slack: f64) -> bool {
        self.worst_tail_increase(from) <= slack
    }

    /// Whether the values themselves are nondecreasing in `n`, up to `slack`.
    pub fn is_nondecreasing(&self, slack: f64) -> bool {
        self.entries.windows(2).all(|w| w[1].value >= w[0].value - slack)
    }
}

pub fn asymptotic_sweep(
    space: &SpaceData,
    n_max: usize,
    degree: usize,
    hankel: Option<usize>,
    conv_tol: f64,
    tol: &Tolerances,
) -> Result<AsymptoticTrace> {
    if n_max < 1 {
        return Err(Error::InvalidTruncation("asymptotic sweep needs n_max >= 1".into()));
    }
    let grid_size = space.symbol().grid().size();
    let hankel_eff = hankel.unwrap_or_else(|| (grid_size / 2).saturating_sub(degree));
    let entries = (0..=n_max as i64)
        .into_par_iter()
        .map(|n| {
            let gram = build_gram_analytic(&space.shifted(n), degree, hankel, tol)?;
            let k = kernel_at_origin(&gram)?;
            Ok(TraceEntry {
                n,
                value: k.normalized_at_zero,
                min_eig: gram.min_eig_estimate(),
                tail_bound: gram.hankel_tail_bound(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let close: Vec<bool> = entries.iter().map(|e| (e.value - 1.0).abs() < conv_tol).collect();
    let converged_at = (0..close.len().saturating_sub(2))
        .find(|&i| close[i..i + 3].iter().all(|&c| c))
        .map(|i| entries[i].n);
    log::debug!("sweep: {} shifts, converged_at = {:?}", entries.len(), converged_at);
    Ok(AsymptoticTrace { entries, degree, hankel: hankel_eff, grid_size, conv_tol, converged_at })
}
