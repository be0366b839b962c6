use super::{Side, TauVector};
use crate::circle::{FourierCoeffs, SymbolData};
use crate::spaces::{canonical_second_component, SpaceData};
use crate::{Error, Result, C64};

/// The inner product of `L²(α) = L²_R ⊕ L²_ν` on grid-sampled vectors:
///
/// `⟨f, g⟩ = ∫ (f1 + conj(R) f2) conj(g1) + (R f1 + f2) conj(g2) dm + Σ_k ν_k f(ζ_k) conj(g(ζ_k))`.
#[derive(Debug, Clone)]
pub struct L2Metric {
    symbol: SymbolData,
    points: Vec<C64>,
    weights: Vec<f64>,
    side: Side,
}

impl L2Metric {
    pub fn new(space: &SpaceData, side: Side) -> Result<Self> {
        let eff = space.effective_data()?;
        Ok(Self { symbol: space.effective_symbol(), points: eff.points, weights: eff.weights, side })
    }

    pub fn symbol(&self) -> &SymbolData {
        &self.symbol
    }

    pub fn points(&self) -> &[C64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn side(&self) -> Side {
        self.side
    }

    fn check(&self, v: &TauVector) -> Result<()> {
        self.symbol.grid().check_len(v.f1.len())?;
        self.symbol.grid().check_len(v.f2.len())?;
        if v.mass_values.len() != self.points.len() {
            return Err(Error::GridMismatch { expected: self.points.len(), found: v.mass_values.len() });
        }
        Ok(())
    }

    pub fn inner(&self, f: &TauVector, g: &TauVector) -> Result<C64> {
        self.check(f)?;
        self.check(g)?;
        let n = self.symbol.grid().size() as f64;
        let circle: C64 = self
            .symbol
            .values()
            .iter()
            .enumerate()
            .map(|(j, r)| {
                let w1 = f.f1[j] + r.conj() * f.f2[j];
                let w2 = r * f.f1[j] + f.f2[j];
                w1 * g.f1[j].conj() + w2 * g.f2[j].conj()
            })
            .sum::<C64>()
            / n;
        let masses: C64 = self
            .weights
            .iter()
            .zip(f.mass_values.iter().zip(&g.mass_values))
            .map(|(w, (a, b))| w * a * b.conj())
            .sum();
        Ok(circle + masses)
    }

    pub fn norm(&self, f: &TauVector) -> Result<f64> {
        Ok(self.inner(f, f)?.re.max(0.0).sqrt())
    }

    /// The vector `(f1, -P_-(R f1))` with the given values at the mass points.
    pub fn canonical(&self, f1: Vec<C64>, mass_values: Vec<C64>) -> Result<TauVector> {
        self.symbol.grid().check_len(f1.len())?;
        let f2 = canonical_second_component(&self.symbol, &f1);
        let v = TauVector { side: self.side, f1, f2, mass_values };
        self.check(&v)?;
        Ok(v)
    }

    /// Canonical vector of a Laurent polynomial with independent mass values.
    pub fn laurent(&self, coeffs: &FourierCoeffs, mass_values: Vec<C64>) -> Result<TauVector> {
        self.canonical(self.symbol.grid().synthesize(coeffs), mass_values)
    }

    /// A function defined on the circle and at the mass points: the image of
    /// `Σ c_p z^p` with mass coordinates `f(ζ_k)`.
    pub fn embed(&self, coeffs: &FourierCoeffs) -> Result<TauVector> {
        let mass_values = self.points.iter().map(|&z| coeffs.eval(z)).collect();
        self.laurent(coeffs, mass_values)
    }
}
