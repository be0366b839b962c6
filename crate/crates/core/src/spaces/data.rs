use crate::circle::{FourierCoeffs, MassSet, SymbolData};
use crate::{Error, Result, C64};

/// Data `α = {R, ν}` with an optional shift `n`, symbol scaling `ρ` and mass cutoff `N`.
///
/// The effective data is `α^{N,ρ}_n = {ρ·ζ^n·R, |ζ|^{2n}·ν^N}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceData {
    symbol: SymbolData,
    masses: MassSet,
    shift: i64,
    rho: f64,
    mass_cutoff: Option<usize>,
}

/// Symbol coefficients and point masses after shift, scaling and cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveData {
    pub coeffs: FourierCoeffs,
    pub points: Vec<C64>,
    pub weights: Vec<f64>,
}

impl SpaceData {
    pub fn new(symbol: SymbolData, masses: MassSet) -> Self {
        Self { symbol, masses, shift: 0, rho: 1.0, mass_cutoff: None }
    }

    pub fn symbol(&self) -> &SymbolData {
        &self.symbol
    }

    pub fn masses(&self) -> &MassSet {
        &self.masses
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn mass_cutoff(&self) -> Option<usize> {
        self.mass_cutoff
    }

    /// Same data with shift `n` (absolute).
    pub fn with_shift(&self, n: i64) -> Self {
        Self { shift: n, ..self.clone() }
    }

    /// Shift by `dn` relative to the current shift.
    pub fn shifted(&self, dn: i64) -> Self {
        self.with_shift(self.shift + dn)
    }

    pub fn with_rho(&self, rho: f64) -> Result<Self> {
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::InvalidTruncation(format!("rho = {rho} must lie in (0, 1]")));
        }
        Ok(Self { rho, ..self.clone() })
    }

    pub fn with_cutoff(&self, n: usize) -> Result<Self> {
        if n > self.masses.len() {
            return Err(Error::InvalidTruncation(format!(
                "mass cutoff {n} exceeds the {} available masses",
                self.masses.len()
            )));
        }
        Ok(Self { mass_cutoff: Some(n), ..self.clone() })
    }

    /// Masses kept by the cutoff, before shift scaling.
    pub fn kept_masses(&self) -> MassSet {
        match self.mass_cutoff {
            Some(n) => self.masses.truncated(n),
            None => self.masses.clone(),
        }
    }

    /// Coefficients `ρ·r_{p-n}` and weights `|ζ_k|^{2n}·ν_k` over the kept masses.
    pub fn effective_data(&self) -> Result<EffectiveData> {
        let coeffs = self.symbol.coeffs().shifted(self.shift).scaled(C64::new(self.rho, 0.0));
        let kept = self.kept_masses();
        let mut weights = Vec::with_capacity(kept.len());
        for (z, w) in kept.points().iter().zip(kept.weights()) {
            if self.shift < 0 && z.norm() == 0.0 {
                return Err(Error::InvalidShift {
                    shift: self.shift,
                    reason: "a mass sits at the origin".into(),
                });
            }
            weights.push(w * z.norm().powi(2 * self.shift as i32));
        }
        Ok(EffectiveData { coeffs, points: kept.points().to_vec(), weights })
    }

    /// The effective symbol `ρ·t^n·R(t)` sampled on the grid.
    pub fn effective_symbol(&self) -> SymbolData {
        let s = if self.shift == 0 { self.symbol.clone() } else { self.symbol.shifted(self.shift) };
        if self.rho == 1.0 {
            s
        } else {
            s.scaled(self.rho)
        }
    }

    /// The effective masses as a validated [`MassSet`].
    pub fn effective_masses(&self) -> Result<MassSet> {
        let eff = self.effective_data()?;
        if eff.weights.contains(&0.0) {
            return Err(Error::InvalidShift {
                shift: self.shift,
                reason: "a mass at the origin has zero effective weight".into(),
            });
        }
        MassSet::new(eff.points, eff.weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::CircleGrid;

    fn grid() -> CircleGrid {
        CircleGrid::new(64).unwrap()
    }

    #[test]
    fn identity_case() {
        let s = SymbolData::from_expression(&grid(), "0.3*conj(t)^2 + 0.1*t").unwrap();
        let m = MassSet::single(C64::new(0.5, 0.0), 3.0).unwrap();
        let space = SpaceData::new(s.clone(), m);
        let eff = space.effective_data().unwrap();
        assert_eq!(&eff.coeffs, s.coeffs());
        assert_eq!(eff.weights, vec![3.0]);
    }

    #[test]
    fn shift_kills_hankel_part() {
        let s = SymbolData::from_expression(&grid(), "0.6*conj(t)").unwrap();
        let space = SpaceData::new(s, MassSet::empty()).with_shift(1);
        let eff = space.effective_data().unwrap();
        assert!((eff.coeffs.get(0) - 0.6).norm() < 1e-15);
        assert!(eff.coeffs.max_abs_below(0) < 1e-15);
    }

    #[test]
    fn shifted_weight() {
        let m = MassSet::single(C64::new(0.5, 0.0), 3.0).unwrap();
        let space = SpaceData::new(SymbolData::zero(&grid()), m).with_shift(2);
        assert_eq!(space.effective_data().unwrap().weights, vec![3.0 / 16.0]);
        let back = space.with_shift(-1);
        assert_eq!(back.effective_data().unwrap().weights, vec![12.0]);
    }

    #[test]
    fn regularizations() {
        let s = SymbolData::from_expression(&grid(), "0.6*conj(t)").unwrap();
        let m = MassSet::new(vec![C64::new(0.5, 0.0), C64::new(0.3, 0.0)], vec![3.0, 1.0]).unwrap();
        let space = SpaceData::new(s, m);
        let r = space.with_rho(0.5).unwrap().effective_data().unwrap();
        assert!((r.coeffs.get(-1) - 0.3).norm() < 1e-15);
        assert_eq!(space.with_cutoff(1).unwrap().effective_data().unwrap().points.len(), 1);
        assert!(space.with_cutoff(3).is_err());
        assert!(space.with_rho(0.0).is_err());
        assert!(space.with_rho(1.5).is_err());
    }

    #[test]
    fn negative_shift_rejects_origin() {
        let m = MassSet::single(C64::new(0.0, 0.0), 1.0).unwrap();
        let space = SpaceData::new(SymbolData::zero(&grid()), m);
        assert!(matches!(space.with_shift(-1).effective_data(), Err(Error::InvalidShift { .. })));
        assert!(space.with_shift(1).effective_masses().is_err());
    }
}
