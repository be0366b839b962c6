use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use rustfft::{Fft, FftPlanner};

use super::FourierCoeffs;
use crate::{Error, Result, C64};

/// Equispaced nodes `t_j = exp(2πi j / size)` on the unit circle.
///
/// Forward transforms return coefficients for indices `-size/2 ..= size/2 - 1`;
/// synthesis folds any index onto its residue modulo `size`.
#[derive(Clone)]
pub struct CircleGrid {
    size: usize,
    nodes: Vec<C64>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for CircleGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CircleGrid").field("size", &self.size).finish()
    }
}

impl PartialEq for CircleGrid {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl CircleGrid {
    pub fn new(size: usize) -> Result<Self> {
        if size < 8 || !size.is_power_of_two() {
            return Err(Error::InvalidGrid { size });
        }
        let nodes = (0..size).map(|j| C64::from_polar(1.0, 2.0 * PI * j as f64 / size as f64)).collect();
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(size);
        let inverse = planner.plan_fft_inverse(size);
        Ok(Self { size, nodes, forward, inverse })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nodes(&self) -> &[C64] {
        &self.nodes
    }

    /// Highest index resolvable without aliasing.
    pub fn max_index(&self) -> i64 {
        self.size as i64 / 2 - 1
    }

    /// Index of the node `conj(t_j)`.
    pub fn conj_index(&self, j: usize) -> usize {
        (self.size - j) % self.size
    }

    /// Reorders samples so that `out[j] = values[conj_index(j)]`, i.e. the
    /// function `u ↦ f(conj u)`.
    pub fn reflect(&self, values: &[C64]) -> Vec<C64> {
        (0..self.size).map(|j| values[self.conj_index(j)]).collect()
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if len != self.size {
            return Err(Error::GridMismatch { expected: self.size, found: len });
        }
        Ok(())
    }

    /// Fourier coefficients of grid samples (trapezoidal rule).
    pub fn forward(&self, values: &[C64]) -> FourierCoeffs {
        assert_eq!(values.len(), self.size, "sample count does not match grid");
        let mut buf = values.to_vec();
        self.forward.process(&mut buf);
        let n = self.size as i64;
        let scale = 1.0 / self.size as f64;
        let coeffs = (-n / 2..n / 2).map(|p| buf[p.rem_euclid(n) as usize] * scale).collect();
        FourierCoeffs::new(-n / 2, coeffs)
    }

    /// Samples of `Σ c_p t^p` on the grid.
    pub fn synthesize(&self, coeffs: &FourierCoeffs) -> Vec<C64> {
        let n = self.size as i64;
        let mut buf = vec![C64::new(0.0, 0.0); self.size];
        for (p, c) in coeffs.iter() {
            buf[p.rem_euclid(n) as usize] += c;
        }
        self.inverse.process(&mut buf);
        buf
    }

    /// Grid mean `(1/N) Σ f(t_j)`, the trapezoidal approximation of `∫ f dm`.
    pub fn mean(&self, values: &[C64]) -> C64 {
        values.iter().sum::<C64>() / self.size as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_sizes() {
        assert!(matches!(CircleGrid::new(4), Err(Error::InvalidGrid { size: 4 })));
        assert!(matches!(CircleGrid::new(24), Err(Error::InvalidGrid { .. })));
        assert!(CircleGrid::new(8).is_ok());
    }

    #[test]
    fn nodes_are_unimodular_and_ordered() {
        let grid = CircleGrid::new(64).unwrap();
        let mut last = -1.0;
        for t in grid.nodes() {
            assert!((t.norm() - 1.0).abs() < 1e-15);
            let arg = t.arg().rem_euclid(2.0 * PI);
            assert!(arg > last || (last < 0.0 && arg == 0.0));
            last = arg;
        }
    }

    #[test]
    fn forward_synthesize_roundtrip() {
        let grid = CircleGrid::new(32).unwrap();
        let c = FourierCoeffs::from_pairs(&[(-3, C64::new(0.5, 1.0)), (0, C64::new(2.0, 0.0)), (7, C64::new(0.0, -1.0))]);
        let v = grid.synthesize(&c);
        let back = grid.forward(&v);
        for p in -16..16 {
            assert!((back.get(p) - c.get(p)).norm() < 1e-14, "index {p}");
        }
    }

    #[test]
    fn reflect_conjugates_nodes() {
        let grid = CircleGrid::new(16).unwrap();
        let r = grid.reflect(grid.nodes());
        for (u, t) in r.iter().zip(grid.nodes()) {
            assert!((u - t.conj()).norm() < 1e-15);
        }
    }
}
