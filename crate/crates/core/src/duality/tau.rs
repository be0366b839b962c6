use serde::Serialize;

use super::DualData;
use crate::{Error, Result, C64};

/// Which of the two spaces a [`TauVector`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    /// `L²(α)`.
    Primal,
    /// `L²(α^τ)`.
    Dual,
}

impl Side {
    pub fn flip(self) -> Self {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }
}

/// An element of `L²(α)`: the pair `(f1, f2)` on the grid and the values at the mass points.
#[derive(Debug, Clone, PartialEq)]
pub struct TauVector {
    pub side: Side,
    pub f1: Vec<C64>,
    pub f2: Vec<C64>,
    pub mass_values: Vec<C64>,
}

impl TauVector {
    pub fn sub(&self, other: &Self) -> Self {
        let diff = |a: &[C64], b: &[C64]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>();
        Self {
            side: self.side,
            f1: diff(&self.f1, &other.f1),
            f2: diff(&self.f2, &other.f2),
            mass_values: diff(&self.mass_values, &other.mass_values),
        }
    }

    pub fn scale(&self, c: C64) -> Self {
        let mul = |a: &[C64]| a.iter().map(|x| x * c).collect::<Vec<_>>();
        Self { side: self.side, f1: mul(&self.f1), f2: mul(&self.f2), mass_values: mul(&self.mass_values) }
    }
}

/// `τ : L²(α) → L²(α^τ)`.
///
/// Circle part, with `M = [[1, conj R], [R, 1]]`:
/// `[f1^τ; f2^τ](conj t) = t · diag(1/conj(T), 1/T_e)(t) · M(t) · [f1; f2](t)`.
///
/// Mass part: `f^τ(conj ζ_k) = -conj((1/T)'(ζ_k)) · f(ζ_k) · ν_k`.
pub fn apply_tau(vector: &TauVector, dual: &DualData) -> Result<TauVector> {
    let symbol = dual.source_symbol();
    let grid = symbol.grid();
    grid.check_len(vector.f1.len())?;
    grid.check_len(vector.f2.len())?;
    let weights = dual.source_weights();
    if vector.mass_values.len() != weights.len() {
        return Err(Error::GridMismatch { expected: weights.len(), found: vector.mass_values.len() });
    }
    let n = grid.size();
    let mut f1 = vec![C64::new(0.0, 0.0); n];
    let mut f2 = vec![C64::new(0.0, 0.0); n];
    let te = dual.source_outer().values();
    let tt = dual.source_blaschke().t_values();
    for (j, t) in grid.nodes().iter().enumerate() {
        let r = symbol.values()[j];
        let (a, b) = (vector.f1[j], vector.f2[j]);
        let w1 = a + r.conj() * b;
        let w2 = r * a + b;
        let target = grid.conj_index(j);
        f1[target] = t * w1 / tt[j].conj();
        f2[target] = t * w2 / te[j];
    }
    let mass_values = vector
        .mass_values
        .iter()
        .zip(dual.inv_t_derivatives())
        .zip(weights)
        .map(|((f, d), w)| -d.conj() * f * *w)
        .collect();
    Ok(TauVector { side: vector.side.flip(), f1, f2, mass_values })
}
