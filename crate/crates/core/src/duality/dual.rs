use serde::{Deserialize, Serialize};

use crate::circle::{build_blaschke, build_outer, BlaschkeData, MassSet, OuterData, SymbolData};
use crate::spaces::SpaceData;
use crate::{Error, Result, Tolerances, C64};

/// How the dual weights `ν^τ_k` are tied to `ν_k` and `d_k = (1/T)'(ζ_k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MassConvention {
    /// `ν^τ_k · ν_k · |d_k|² = 1`, the only choice for which the mass part of `τ` is isometric.
    #[default]
    Unitary,
    /// `ν^τ_k · ν_k = |d_k|²`, kept for auditing.
    Printed,
}

impl MassConvention {
    pub fn describe(self) -> &'static str {
        match self {
            MassConvention::Unitary => "unitary: dual_weight * weight * |(1/T)'(zeta)|^2 = 1",
            MassConvention::Printed => "printed: dual_weight * weight = |(1/T)'(zeta)|^2",
        }
    }
}

/// Everything `τ` needs from the source side, plus the dual data itself.
#[derive(Debug, Clone)]
pub struct DualData {
    source: SpaceData,
    source_symbol: SymbolData,
    source_outer: OuterData,
    source_blaschke: BlaschkeData,
    source_weights: Vec<f64>,
    /// `(1/T)'(ζ_k) = B'(ζ_k) / T_e(ζ_k)`.
    inv_t_derivatives: Vec<C64>,
    target: SpaceData,
    outer_dual: OuterData,
    convention: MassConvention,
}

/// Dual data for the effective data of `space`:
///
/// * `R^τ(conj t) = -R(t) · conj(T(t)) / T_e(t)` on the grid,
/// * masses at `conj(ζ_k)` with weights fixed by `convention`,
/// * `T(0) = T_e(0) / B(0)`.
///
/// `outer` and `blaschke` must have been built from `space.effective_symbol()`
/// and `space.effective_masses()`.
pub fn build_dual(
    space: &SpaceData,
    outer: &OuterData,
    blaschke: &BlaschkeData,
    convention: MassConvention,
    tol: &Tolerances,
) -> Result<DualData> {
    let symbol = space.effective_symbol();
    let masses = space.effective_masses()?;
    let grid = symbol.grid();
    grid.check_len(outer.values().len())?;
    grid.check_len(blaschke.values().len())?;
    if blaschke.points().len() != masses.len() {
        return Err(Error::GridMismatch { expected: masses.len(), found: blaschke.points().len() });
    }

    let flipped: Vec<C64> = symbol
        .values()
        .iter()
        .zip(blaschke.t_values())
        .zip(outer.values())
        .map(|((r, t), te)| -r * t.conj() / te)
        .collect();
    let dual_symbol = SymbolData::from_values(grid, grid.reflect(&flipped))?;

    let mut inv_t_derivatives = Vec::with_capacity(masses.len());
    let mut dual_weights = Vec::with_capacity(masses.len());
    for (k, (z, w)) in masses.points().iter().zip(masses.weights()).enumerate() {
        let db = blaschke.derivatives()[k];
        if db.norm() < f64::EPSILON {
            return Err(Error::DegenerateDerivative { index: k, modulus: db.norm() });
        }
        let d = db / outer.eval(*z);
        inv_t_derivatives.push(d);
        dual_weights.push(match convention {
            MassConvention::Unitary => 1.0 / (w * d.norm_sqr()),
            MassConvention::Printed => d.norm_sqr() / w,
        });
    }
    let dual_points = masses.points().iter().map(|z| z.conj()).collect();
    let dual_masses = MassSet::new(dual_points, dual_weights)?;
    let outer_dual = build_outer(&dual_symbol, tol)?;
    Ok(DualData {
        source: space.clone(),
        source_symbol: symbol,
        source_outer: outer.clone(),
        source_blaschke: blaschke.clone(),
        source_weights: masses.weights().to_vec(),
        inv_t_derivatives,
        target: SpaceData::new(dual_symbol, dual_masses),
        outer_dual,
        convention,
    })
}

impl DualData {
    /// Builds the outer function and Blaschke product of `space` and then the dual.
    pub fn from_space(space: &SpaceData, convention: MassConvention, tol: &Tolerances) -> Result<Self> {
        let outer = build_outer(&space.effective_symbol(), tol)?;
        let blaschke = build_blaschke(&space.effective_masses()?, &outer)?;
        build_dual(space, &outer, &blaschke, convention, tol)
    }

    /// The data `α` this dual was built from.
    pub fn source(&self) -> &SpaceData {
        &self.source
    }

    pub fn source_symbol(&self) -> &SymbolData {
        &self.source_symbol
    }

    pub fn source_outer(&self) -> &OuterData {
        &self.source_outer
    }

    pub fn source_blaschke(&self) -> &BlaschkeData {
        &self.source_blaschke
    }

    pub fn source_weights(&self) -> &[f64] {
        &self.source_weights
    }

    pub fn inv_t_derivatives(&self) -> &[C64] {
        &self.inv_t_derivatives
    }

    /// `α^τ` as plain space data (shift 0, no regularization).
    pub fn target(&self) -> &SpaceData {
        &self.target
    }

    pub fn dual_symbol(&self) -> &SymbolData {
        self.target.symbol()
    }

    pub fn dual_masses(&self) -> &MassSet {
        self.target.masses()
    }

    /// `T_e^τ`, built from `R^τ` directly.
    pub fn outer_dual(&self) -> &OuterData {
        &self.outer_dual
    }

    pub fn t_at_zero(&self) -> f64 {
        self.source_blaschke.t_at_zero()
    }

    pub fn convention(&self) -> MassConvention {
        self.convention
    }

    pub fn provenance(&self) -> &'static str {
        self.convention.describe()
    }

    /// `max_j | |R^τ(conj t_j)| - |R(t_j)| |`.
    pub fn modulus_residual(&self) -> f64 {
        let grid = self.source_symbol.grid();
        let reflected = grid.reflect(self.dual_symbol().values());
        reflected
            .iter()
            .zip(self.source_symbol.values())
            .map(|(a, b)| (a.norm() - b.norm()).abs())
            .fold(0.0, f64::max)
    }

    /// `max_j |T_e^τ(t_j) - conj(T_e(conj t_j))|`.
    pub fn outer_reflection_residual(&self) -> f64 {
        let grid = self.source_symbol.grid();
        let reflected = grid.reflect(self.source_outer.values());
        self.outer_dual
            .values()
            .iter()
            .zip(&reflected)
            .map(|(a, b)| (a - b.conj()).norm())
            .fold(0.0, f64::max)
    }
}
