use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

use super::SpaceData;
use crate::circle::FourierCoeffs;
use crate::{Error, Result, Tolerances, C64};

/// Basis on which a [`GramMatrix`] is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Monomials `z^0 ..= z^degree`.
    Analytic { degree: usize },
    /// Laurent monomials `z^-half_band ..= z^half_band` followed by one
    /// coordinate per point mass.
    Laurent { half_band: usize, masses: usize },
}

impl BasisKind {
    pub fn order(&self) -> usize {
        match *self {
            BasisKind::Analytic { degree } => degree + 1,
            BasisKind::Laurent { half_band, masses } => 2 * half_band + 1 + masses,
        }
    }
}

/// Truncated Hankel operator: rows `j = 1..=J`, columns indexed by the basis
/// exponents `m`, entries `r_{-j-m}`.
#[derive(Debug, Clone)]
pub struct HankelBlock {
    pub truncation: usize,
    pub indices: Vec<i64>,
    pub matrix: DMatrix<C64>,
    /// `(Γ*Γ)_{ml} = Σ_j conj(r_{-j-m}) r_{-j-l}`.
    pub gamma_gram: DMatrix<C64>,
    /// `max_{m,l} Σ_{j>J} |r_{-j-m}| |r_{-j-l}|` over the stored coefficients.
    pub tail_bound: f64,
}

pub fn build_hankel(coeffs: &FourierCoeffs, indices: &[i64], truncation: usize) -> HankelBlock {
    let j_max = truncation as i64;
    let matrix = DMatrix::from_fn(truncation, indices.len(), |row, col| coeffs.get(-(row as i64 + 1) - indices[col]));
    let gamma_gram = matrix.adjoint() * &matrix;
    let tails: Vec<Vec<f64>> = indices
        .iter()
        .map(|&m| {
            let last = (-coeffs.lo() - m).max(j_max);
            (j_max + 1..=last).map(|j| coeffs.get(-j - m).norm()).collect()
        })
        .collect();
    let mut tail_bound = 0.0f64;
    for a in &tails {
        for b in &tails {
            let s: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
            tail_bound = tail_bound.max(s);
        }
    }
    HankelBlock { truncation, indices: indices.to_vec(), matrix, gamma_gram, tail_bound }
}

/// Hermitian positive definite matrix of the metric on a truncated basis,
/// with its Cholesky factor.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    entries: DMatrix<C64>,
    basis: BasisKind,
    factor: Cholesky<C64, Dyn>,
    min_eig_estimate: f64,
    hankel_tail_bound: f64,
}

impl GramMatrix {
    /// Hermitizes `entries`, factors it and estimates the smallest eigenvalue.
    pub fn from_entries(entries: DMatrix<C64>, basis: BasisKind, tol: &Tolerances) -> Result<Self> {
        let entries = (&entries + entries.adjoint()) * C64::new(0.5, 0.0);
        let Some(factor) = Cholesky::new(entries.clone()) else {
            let min_eig = entries.clone().symmetric_eigenvalues().min();
            return Err(Error::NotPositiveDefinite { min_eig });
        };
        let min_eig_estimate = smallest_eigenvalue(&entries, &factor);
        if min_eig_estimate < tol.psd {
            return Err(Error::NotPositiveDefinite { min_eig: min_eig_estimate });
        }
        Ok(Self { entries, basis, factor, min_eig_estimate, hankel_tail_bound: 0.0 })
    }

    pub fn order(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn min_eig_estimate(&self) -> f64 {
        self.min_eig_estimate
    }

    pub fn hankel_tail_bound(&self) -> f64 {
        self.hankel_tail_bound
    }

    pub fn solve(&self, rhs: &DVector<C64>) -> DVector<C64> {
        self.factor.solve(rhs)
    }

    /// `v^H G v`.
    pub fn quad_form(&self, v: &DVector<C64>) -> f64 {
        self.inner(v, v).re
    }

    /// `⟨u, v⟩ = v^H G u`, linear in `u`.
    pub fn inner(&self, u: &DVector<C64>, v: &DVector<C64>) -> C64 {
        (v.adjoint() * &self.entries * u)[(0, 0)]
    }
}

/// Inverse iteration on the Cholesky factor.
fn smallest_eigenvalue(entries: &DMatrix<C64>, factor: &Cholesky<C64, Dyn>) -> f64 {
    let n = entries.nrows();
    let mut x = DVector::from_fn(n, |i, _| C64::new(1.0 + 0.01 * i as f64, 0.1 * (i % 3) as f64));
    x /= C64::new(x.norm(), 0.0);
    let mut lambda = f64::INFINITY;
    for _ in 0..200 {
        let y = factor.solve(&x);
        let ny = y.norm();
        if !ny.is_finite() || ny == 0.0 {
            break;
        }
        let next = y / C64::new(ny, 0.0);
        let rayleigh = (next.adjoint() * entries * &next)[(0, 0)].re;
        let converged = (rayleigh - lambda).abs() <= 1e-15 * rayleigh.abs().max(1e-300);
        lambda = rayleigh;
        x = next;
        if converged {
            break;
        }
    }
    lambda
}

fn default_truncation(space: &SpaceData, reach: usize) -> Result<usize> {
    let half = space.symbol().grid().size() / 2;
    if reach >= half {
        return Err(Error::InvalidTruncation(format!(
            "basis reach {reach} does not fit grid of size {}",
            2 * half
        )));
    }
    Ok(half - reach)
}

/// Gram matrix of `D(α_n^{N,ρ})` on `z^0 ..= z^degree`:
/// `G_{ml} = δ_{ml} - Σ_{j=1..J} conj(r_{-j-m}) r_{-j-l} + Σ_k conj(ζ_k)^m ζ_k^l ν_k`.
///
/// `hankel` defaults to `N/2 - degree`.
pub fn build_gram_analytic(space: &SpaceData, degree: usize, hankel: Option<usize>, tol: &Tolerances) -> Result<GramMatrix> {
    let truncation = match hankel {
        Some(0) => return Err(Error::InvalidTruncation("Hankel truncation must be at least 1".into())),
        Some(j) => j,
        None => default_truncation(space, degree)?,
    };
    let eff = space.effective_data()?;
    let indices: Vec<i64> = (0..=degree as i64).collect();
    let hankel = build_hankel(&eff.coeffs, &indices, truncation);
    let mut entries = DMatrix::<C64>::identity(degree + 1, degree + 1) - &hankel.gamma_gram;
    for (z, w) in eff.points.iter().zip(&eff.weights) {
        let a = DVector::from_fn(degree + 1, |m, _| z.conj().powi(m as i32));
        entries += (&a * a.adjoint()) * C64::new(*w, 0.0);
    }
    let mut gram = GramMatrix::from_entries(entries, BasisKind::Analytic { degree }, tol)?;
    gram.hankel_tail_bound = hankel.tail_bound;
    Ok(gram)
}

/// Gram matrix of `L²(α) = L²_R ⊕ L²_ν` on Laurent monomials `z^-M ..= z^M`
/// plus one coordinate per mass: the Laurent block is
/// `A_{ml} = δ_{ml} - Σ_{j=1..J} conj(r_{-j-m}) r_{-j-l}` (the norm
/// `‖f‖² - ‖P_-(Rf)‖²` of canonical vectors `(f, -P_-(Rf))`), the mass block is
/// `diag(ν_k)` and the two blocks do not couple.
pub fn build_gram_laurent(space: &SpaceData, half_band: usize, hankel: Option<usize>, tol: &Tolerances) -> Result<GramMatrix> {
    let truncation = match hankel {
        Some(0) => return Err(Error::InvalidTruncation("Hankel truncation must be at least 1".into())),
        Some(j) => j,
        None => default_truncation(space, half_band)?,
    };
    let eff = space.effective_data()?;
    let m = half_band as i64;
    let indices: Vec<i64> = (-m..=m).collect();
    let hankel = build_hankel(&eff.coeffs, &indices, truncation);
    let laurent = indices.len();
    let order = laurent + eff.points.len();
    let mut entries = DMatrix::<C64>::identity(order, order);
    let mut block = entries.view_mut((0, 0), (laurent, laurent));
    block -= &hankel.gamma_gram;
    for (k, w) in eff.weights.iter().enumerate() {
        entries[(laurent + k, laurent + k)] = C64::new(*w, 0.0);
    }
    let basis = BasisKind::Laurent { half_band, masses: eff.points.len() };
    let mut gram = GramMatrix::from_entries(entries, basis, tol)?;
    gram.hankel_tail_bound = hankel.tail_bound;
    Ok(gram)
}

/// Columns: the images of `z^0 ..= z^degree` in Laurent ⊕ mass coordinates,
/// i.e. a unit at Laurent index `p` and mass coordinates `ζ_k^p`.
pub fn embed_h2(space: &SpaceData, degree: usize, half_band: usize) -> Result<DMatrix<C64>> {
    if degree > half_band {
        return Err(Error::InvalidTruncation(format!("degree {degree} exceeds Laurent half-band {half_band}")));
    }
    let points = space.kept_masses().points().to_vec();
    let laurent = 2 * half_band + 1;
    let mut e = DMatrix::<C64>::zeros(laurent + points.len(), degree + 1);
    for p in 0..=degree {
        e[(half_band + p, p)] = C64::new(1.0, 0.0);
        for (k, z) in points.iter().enumerate() {
            e[(laurent + k, p)] = z.powi(p as i32);
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{CircleGrid, MassSet, SymbolData};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn grid() -> CircleGrid {
        CircleGrid::new(256).unwrap()
    }

    fn max_abs(m: &DMatrix<C64>) -> f64 {
        m.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn close(a: C64, b: f64) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn plain_h2_gives_identity() {
        let space = SpaceData::new(SymbolData::zero(&grid()), MassSet::empty());
        let g = build_gram_analytic(&space, 3, None, &tol()).unwrap();
        assert_eq!(g.entries(), &DMatrix::<C64>::identity(4, 4));
        assert!((g.min_eig_estimate() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn hankel_only_diagonal() {
        let s = SymbolData::from_expression(&grid(), "0.6*conj(t)").unwrap();
        let space = SpaceData::new(s, MassSet::empty());
        let g = build_gram_analytic(&space, 3, Some(4), &tol()).unwrap();
        for m in 0..4 {
            for l in 0..4 {
                let expected = match (m, l) {
                    (0, 0) => 0.64,
                    (a, b) if a == b => 1.0,
                    _ => 0.0,
                };
                assert!(close(g.entries()[(m, l)], expected), "({m},{l})");
            }
        }
        assert!((g.min_eig_estimate() - 0.64).abs() < 1e-12);
    }

    #[test]
    fn single_mass_entries() {
        let m = MassSet::single(C64::new(0.5, 0.0), 3.0).unwrap();
        let space = SpaceData::new(SymbolData::zero(&grid()), m);
        let g = build_gram_analytic(&space, 2, None, &tol()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let expected = if a == b { 1.0 } else { 0.0 } + 3.0 * 0.5f64.powi((a + b) as i32);
                assert!(close(g.entries()[(a, b)], expected));
            }
        }
    }

    #[test]
    fn laurent_blocks() {
        let s = SymbolData::from_expression(&grid(), "0.6*conj(t)").unwrap();
        let m = MassSet::new(vec![C64::new(0.5, 0.0), C64::new(0.0, 0.3)], vec![3.0, 1.0]).unwrap();
        let space = SpaceData::new(s, m);
        let g = build_gram_laurent(&space, 3, None, &tol()).unwrap();
        let at = |m: i64, l: i64| g.entries()[((m + 3) as usize, (l + 3) as usize)];
        assert!(close(at(0, 0), 0.64));
        assert!(close(at(-1, -1), 0.64));
        assert!(close(at(1, 1), 1.0));
        assert!(close(at(-2, -2), 0.64));
        assert!(close(at(0, -1), 0.0));
        assert!(close(g.entries()[(7, 7)], 3.0));
        assert!(close(g.entries()[(8, 8)], 1.0));
        assert!(close(g.entries()[(7, 3)], 0.0));
        assert_eq!(g.basis(), BasisKind::Laurent { half_band: 3, masses: 2 });
    }

    #[test]
    fn zero_symbol_laurent_is_identity_plus_masses() {
        let m = MassSet::new(vec![C64::new(0.5, 0.0)], vec![3.0]).unwrap();
        let space = SpaceData::new(SymbolData::zero(&grid()), m);
        let g = build_gram_laurent(&space, 2, None, &tol()).unwrap();
        let mut expected = DMatrix::<C64>::identity(6, 6);
        expected[(5, 5)] = C64::new(3.0, 0.0);
        assert_eq!(g.entries(), &expected);
    }

    #[test]
    fn embedding_congruence_reproduces_analytic_gram() {
        let s = SymbolData::from_expression(&grid(), "0.5*conj(t)/(1-0.3*conj(t)) + 0.2*t").unwrap();
        let m = MassSet::new(vec![C64::new(0.5, 0.0), C64::new(-0.2, 0.3)], vec![1.0, 2.0]).unwrap();
        let space = SpaceData::new(s, m);
        let (deg, band) = (6, 10);
        let j = 100;
        let analytic = build_gram_analytic(&space, deg, Some(j), &tol()).unwrap();
        let laurent = build_gram_laurent(&space, band, Some(j), &tol()).unwrap();
        let e = embed_h2(&space, deg, band).unwrap();
        let congruent = e.adjoint() * laurent.entries() * &e;
        assert!(max_abs(&(congruent - analytic.entries())) < 1e-14);
        let mass_cols = e.column(1);
        assert!((mass_cols[21] - C64::new(0.5, 0.0)).norm() < 1e-15);
        assert!((e.column(0)[21] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(embed_h2(&space, 11, 10).is_err());
    }

    #[test]
    fn unimodular_symbol_is_not_positive_definite() {
        let s = SymbolData::from_expression(&grid(), "conj(t)").unwrap();
        let space = SpaceData::new(s, MassSet::empty());
        assert!(matches!(build_gram_analytic(&space, 3, None, &tol()), Err(Error::NotPositiveDefinite { .. })));
    }

    #[test]
    fn hankel_contraction_and_tail() {
        let s = SymbolData::from_expression(&grid(), "0.7*conj(t)/(1-0.5*conj(t))").unwrap();
        let eff = SpaceData::new(s.clone(), MassSet::empty()).effective_data().unwrap();
        let idx: Vec<i64> = (0..8).collect();
        let h = build_hankel(&eff.coeffs, &idx, 20);
        let top = h.gamma_gram.clone().symmetric_eigenvalues().max();
        assert!(top <= s.sup_modulus().powi(2) + 1e-10);
        let longer = build_hankel(&eff.coeffs, &idx, 30);
        let change = max_abs(&(&longer.gamma_gram - &h.gamma_gram));
        assert!(change <= h.tail_bound + 1e-15);
        assert!(h.tail_bound > 0.0);
    }
}
