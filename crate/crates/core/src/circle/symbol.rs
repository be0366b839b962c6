use super::expr::Expr;
use super::{CircleGrid, FourierCoeffs};
use crate::{Result, C64};

/// A symbol `R` on the unit circle held simultaneously as grid samples and
/// as Fourier coefficients (indices `-N/2 ..= N/2 - 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolData {
    grid: CircleGrid,
    values: Vec<C64>,
    coeffs: FourierCoeffs,
    sup_modulus: f64,
}

impl SymbolData {
    pub fn from_values(grid: &CircleGrid, values: Vec<C64>) -> Result<Self> {
        grid.check_len(values.len())?;
        let coeffs = grid.forward(&values);
        let sup_modulus = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        Ok(Self { grid: grid.clone(), values, coeffs, sup_modulus })
    }

    /// Symbol given by finitely many Fourier coefficients. Indices beyond the
    /// grid's Nyquist band alias.
    pub fn from_coefficients(grid: &CircleGrid, pairs: &[(i64, C64)]) -> Result<Self> {
        let values = grid.synthesize(&FourierCoeffs::from_pairs(pairs));
        Self::from_values(grid, values)
    }

    /// Symbol given by an expression in `t` and `conj(t)`, see [`Expr`].
    pub fn from_expression(grid: &CircleGrid, src: &str) -> Result<Self> {
        let expr = Expr::parse(src)?;
        Self::from_fn(grid, |t| expr.eval(t))
    }

    pub fn from_fn(grid: &CircleGrid, f: impl Fn(C64) -> C64) -> Result<Self> {
        let values = grid.nodes().iter().map(|&t| f(t)).collect();
        Self::from_values(grid, values)
    }

    pub fn zero(grid: &CircleGrid) -> Self {
        Self::from_values(grid, vec![C64::new(0.0, 0.0); grid.size()]).expect("length matches grid")
    }

    /// Resamples onto another grid by zero-padding or truncating the spectrum.
    pub fn regrid(&self, grid: &CircleGrid) -> Result<Self> {
        let lo = -(grid.size() as i64) / 2;
        let hi = grid.max_index();
        Self::from_values(grid, grid.synthesize(&self.coeffs.band(lo, hi)))
    }

    /// `ρ·R`.
    pub fn scaled(&self, rho: f64) -> Self {
        let values = self.values.iter().map(|v| v * rho).collect();
        Self::from_values(&self.grid, values).expect("length matches grid")
    }

    /// `t^n · R(t)` sampled on the grid.
    pub fn shifted(&self, n: i64) -> Self {
        let values = self.values.iter().zip(self.grid.nodes()).map(|(v, t)| v * t.powi(n as i32)).collect();
        Self::from_values(&self.grid, values).expect("length matches grid")
    }

    pub fn grid(&self) -> &CircleGrid {
        &self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn coeffs(&self) -> &FourierCoeffs {
        &self.coeffs
    }

    pub fn sup_modulus(&self) -> f64 {
        self.sup_modulus
    }

    /// Largest discrepancy between stored samples and the synthesis of the
    /// stored coefficients.
    pub fn fft_consistency(&self) -> f64 {
        let back = self.grid.synthesize(&self.coeffs);
        back.iter().zip(&self.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}
