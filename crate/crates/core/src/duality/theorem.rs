use nalgebra::{Cholesky, DMatrix};
use rayon::prelude::*;
use serde::Serialize;

use super::{apply_tau, DualData, HatChecker, L2Metric, Side, TauVector};
use crate::circle::FourierCoeffs;
use crate::spaces::{build_gram_laurent, embed_h2, SpaceData};
use crate::{Error, Result, Tolerances, C64};

/// Residuals for "τ maps `L²(α) ⊖ Ȟ²(α)` onto `Ĥ²(α^τ)`".
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub half_band: usize,
    pub complement_dim: usize,
    /// Largest `‖P_-(T_e^τ f1^τ)‖` over the orthonormal complement basis.
    pub max_antianalytic: f64,
    /// Largest `|f^τ(conj ζ_k) - g(conj ζ_k)/T_e^τ(conj ζ_k)|`.
    pub max_mass_mismatch: f64,
    /// `max(max_antianalytic, max_mass_mismatch)`.
    pub membership_residual: f64,
    /// Largest `|‖τ v‖ - 1|` over the complement basis.
    pub unitarity_residual: f64,
    /// Largest normalized `|⟨v, B z^q⟩|` and `|⟨v, B/(t - ζ_k)⟩|` over the complement basis.
    pub complement_orthogonality: f64,
    /// Largest normalized `|⟨τ z^p, B z^q⟩|` and `|⟨τ z^p, B/(t - ζ_k)⟩|` for `z^p ∈ Ĥ²(α^τ)`.
    pub converse_residual: f64,
}

impl TheoremReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.membership_residual < tol && self.converse_residual < tol
    }
}

/// Orthonormal basis of the complement of `z^0 ..= z^M` inside the Laurent band
/// `z^-M ..= z^M` plus mass coordinates, one column per vector.
fn complement_basis(space: &SpaceData, half_band: usize, hankel: Option<usize>, tol: &Tolerances) -> Result<DMatrix<C64>> {
    let gram = build_gram_laurent(space, half_band, hankel, tol)?;
    let g = gram.entries();
    let e = embed_h2(space, half_band, half_band)?;
    let s = e.adjoint() * g * &e;
    let s = Cholesky::new(s).ok_or(Error::NotPositiveDefinite { min_eig: f64::NAN })?;
    let order = g.nrows();
    let laurent = 2 * half_band + 1;
    let dim = half_band + (order - laurent);
    let mut seeds = DMatrix::<C64>::zeros(order, dim);
    for i in 0..half_band {
        seeds[(i, i)] = C64::new(1.0, 0.0);
    }
    for k in 0..order - laurent {
        seeds[(laurent + k, half_band + k)] = C64::new(1.0, 0.0);
    }
    let c = &seeds - &e * s.solve(&(e.adjoint() * g * &seeds));
    let h = c.adjoint() * g * &c;
    let h = (&h + h.adjoint()) * C64::new(0.5, 0.0);
    let l = Cholesky::new(h).ok_or(Error::NotPositiveDefinite { min_eig: f64::NAN })?.l();
    let y = l.solve_lower_triangular(&c.adjoint()).ok_or(Error::NotPositiveDefinite { min_eig: 0.0 })?;
    Ok(y.adjoint())
}

/// Test vectors of `Ȟ²(α)`: `B z^q` for `q = 0 ..= q_max` and `B/(t - ζ_k)`,
/// whose only nonzero mass coordinate is `B'(ζ_k)` at `ζ_k`.
fn test_vectors(metric: &L2Metric, dual: &DualData, q_max: usize) -> Result<Vec<TauVector>> {
    let blaschke = dual.source_blaschke();
    let nodes = metric.symbol().grid().nodes();
    let zeros = vec![C64::new(0.0, 0.0); metric.points().len()];
    let mut out = Vec::new();
    for q in 0..=q_max {
        let f1 = blaschke.values().iter().zip(nodes).map(|(b, t)| b * t.powi(q as i32)).collect();
        out.push(metric.canonical(f1, zeros.clone())?);
    }
    for (k, z) in metric.points().iter().enumerate() {
        let f1 = blaschke.values().iter().zip(nodes).map(|(b, t)| b / (t - z)).collect();
        let mut masses = zeros.clone();
        masses[k] = blaschke.derivatives()[k];
        out.push(metric.canonical(f1, masses)?);
    }
    Ok(out)
}

fn max_normalized_overlap(metric: &L2Metric, vectors: &[TauVector], tests: &[TauVector]) -> Result<f64> {
    let test_norms = tests.iter().map(|t| metric.norm(t)).collect::<Result<Vec<_>>>()?;
    vectors
        .par_iter()
        .map(|v| {
            let nv = metric.norm(v)?;
            tests.iter().zip(&test_norms).try_fold(0.0f64, |acc, (t, nt)| {
                Ok(acc.max(metric.inner(v, t)?.norm() / (nv * nt)))
            })
        })
        .collect::<Result<Vec<f64>>>()
        .map(|r| r.into_iter().fold(0.0, f64::max))
}

/// Checks the complement-mapping theorem on the Laurent band `-half_band ..= half_band`.
///
/// `dual` must have been built from `space`.
pub fn theorem_check(
    space: &SpaceData,
    dual: &DualData,
    half_band: usize,
    hankel: Option<usize>,
    tol: &Tolerances,
) -> Result<TheoremReport> {
    let basis = complement_basis(space, half_band, hankel, tol)?;
    let metric = L2Metric::new(space, Side::Primal)?;
    let dual_metric = L2Metric::new(dual.target(), Side::Dual)?;
    let checker = HatChecker::new(dual.target(), tol)?;
    let laurent = 2 * half_band + 1;
    let m = half_band as i64;

    let vectors = (0..basis.ncols())
        .into_par_iter()
        .map(|col| {
            let c = basis.column(col);
            let coeffs = FourierCoeffs::new(-m, c.rows(0, laurent).iter().copied().collect());
            metric.laurent(&coeffs, c.rows(laurent, basis.nrows() - laurent).iter().copied().collect())
        })
        .collect::<Result<Vec<_>>>()?;

    let per_vector = vectors
        .par_iter()
        .map(|v| {
            let image = apply_tau(v, dual)?;
            let report = checker.check(&image)?;
            let norm = dual_metric.norm(&image)?;
            Ok((report.antianalytic_residual, report.mass_mismatch, (norm - 1.0).abs()))
        })
        .collect::<Result<Vec<_>>>()?;
    let (max_antianalytic, max_mass_mismatch, unitarity_residual) = per_vector
        .iter()
        .fold((0.0f64, 0.0f64, 0.0f64), |a, b| (a.0.max(b.0), a.1.max(b.1), a.2.max(b.2)));

    let q_max = half_band / 2;
    let tests = test_vectors(&metric, dual, q_max)?;
    let complement_orthogonality = max_normalized_overlap(&metric, &vectors, &tests)?;

    let back = DualData::from_space(dual.target(), dual.convention(), tol)?;
    let hats = (0..=q_max)
        .map(|p| {
            let mut c = vec![C64::new(0.0, 0.0); p + 1];
            c[p] = C64::new(1.0, 0.0);
            apply_tau(&dual_metric.embed(&FourierCoeffs::new(0, c))?, &back)
        })
        .collect::<Result<Vec<_>>>()?;
    let converse_residual = max_normalized_overlap(&metric, &hats, &tests)?;

    let report = TheoremReport {
        half_band,
        complement_dim: basis.ncols(),
        max_antianalytic,
        max_mass_mismatch,
        membership_residual: max_antianalytic.max(max_mass_mismatch),
        unitarity_residual,
        complement_orthogonality,
        converse_residual,
    };
    log::debug!("theorem check: {report:?}");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{CircleGrid, MassSet, SymbolData};
    use crate::duality::MassConvention;

    fn run(space: &SpaceData, half_band: usize) -> TheoremReport {
        let tol = Tolerances::default();
        let dual = DualData::from_space(space, MassConvention::Unitary, &tol).unwrap();
        theorem_check(space, &dual, half_band, None, &tol).unwrap()
    }

    #[test]
    fn classical_case_is_exact() {
        let grid = CircleGrid::new(256).unwrap();
        let r = run(&SpaceData::new(SymbolData::zero(&grid), MassSet::empty()), 16);
        assert_eq!(r.complement_dim, 16);
        assert!(r.membership_residual < 1e-14, "{r:?}");
        assert!(r.unitarity_residual < 1e-13 && r.converse_residual < 1e-14);
    }

    #[test]
    fn mass_case() {
        let grid = CircleGrid::new(1024).unwrap();
        let r = run(&SpaceData::new(SymbolData::zero(&grid), MassSet::single(C64::new(0.5, 0.0), 3.0).unwrap()), 32);
        assert_eq!(r.complement_dim, 33);
        assert!(r.membership_residual < 1e-7, "{r:?}");
        assert!(r.complement_orthogonality < 1e-8 && r.converse_residual < 1e-8, "{r:?}");
    }

    #[test]
    fn hankel_and_mass_case() {
        let grid = CircleGrid::new(1024).unwrap();
        let symbol = SymbolData::from_coefficients(&grid, &[(-1, C64::new(0.6, 0.0))]).unwrap();
        let r = run(&SpaceData::new(symbol, MassSet::single(C64::new(1.0 / 3.0, 0.0), 1.0).unwrap()), 48);
        assert!(r.membership_residual < 1e-6, "{r:?}");
        assert!(r.unitarity_residual < 1e-8 && r.converse_residual < 1e-8, "{r:?}");
    }
}
