use super::{validate_szego, CircleGrid, FourierCoeffs, SymbolData};
use crate::{Error, Result, Tolerances, C64};

/// The outer function `T_e` with `|T_e|² = 1 - |R|²` on the circle and `T_e(0) > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct OuterData {
    grid: CircleGrid,
    values: Vec<C64>,
    value_at_zero: f64,
    coeffs: FourierCoeffs,
    /// Taylor coefficients of `log T_e`, indices `0 ..= N/2`.
    log_coeffs: FourierCoeffs,
}

/// Builds `T_e = exp(h + i·h̃)` where `h = ½ log(1 - |R|²)` and `h + i·h̃` is
/// its analytic completion (negative frequencies dropped, positive ones doubled,
/// the mean kept once).
pub fn build_outer(symbol: &SymbolData, tol: &Tolerances) -> Result<OuterData> {
    let report = validate_szego(symbol, tol)?;
    if let Some(&node) = report.touching_nodes.first() {
        let margin = 1.0 - symbol.values()[node].norm_sqr();
        return Err(Error::SzegoViolation { node, margin });
    }
    let grid = symbol.grid();
    let n = grid.size() as i64;
    let half_log: Vec<C64> = symbol
        .values()
        .iter()
        .enumerate()
        .map(|(node, r)| {
            let margin = 1.0 - r.norm_sqr();
            if margin < tol.touch {
                Err(Error::SzegoViolation { node, margin })
            } else {
                Ok(C64::new(0.5 * margin.ln(), 0.0))
            }
        })
        .collect::<Result<_>>()?;
    let h = grid.forward(&half_log);
    let lc: Vec<C64> = (0..=n / 2)
        .map(|p| match p {
            0 => C64::new(h.get(0).re, 0.0),
            p if p == n / 2 => h.get(-n / 2),
            p => 2.0 * h.get(p),
        })
        .collect();
    let log_coeffs = FourierCoeffs::new(0, lc);
    let values: Vec<C64> = grid.synthesize(&log_coeffs).into_iter().map(|v| v.exp()).collect();
    let coeffs = grid.forward(&values);
    let value_at_zero = h.get(0).re.exp();
    let outer = OuterData { grid: grid.clone(), values, value_at_zero, coeffs, log_coeffs };
    let modulus = outer.modulus_residual(symbol);
    let analytic = outer.negative_residual();
    if modulus > tol.outer || analytic > tol.outer {
        log::warn!("outer function under-resolved on grid {n}: modulus residual {modulus:e}, negative-index residual {analytic:e}");
    }
    Ok(outer)
}

impl OuterData {
    pub fn grid(&self) -> &CircleGrid {
        &self.grid
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn value_at_zero(&self) -> f64 {
        self.value_at_zero
    }

    pub fn coeffs(&self) -> &FourierCoeffs {
        &self.coeffs
    }

    pub fn log_coeffs(&self) -> &FourierCoeffs {
        &self.log_coeffs
    }

    /// `T_e(z)` for `|z| < 1`, via the exponential of the Taylor series of `log T_e`.
    pub fn eval(&self, z: C64) -> C64 {
        self.log_coeffs.eval_analytic(z).exp()
    }

    /// `max_j | |T_e(t_j)|² + |R(t_j)|² - 1 |`.
    pub fn modulus_residual(&self, symbol: &SymbolData) -> f64 {
        self.values
            .iter()
            .zip(symbol.values())
            .map(|(t, r)| (t.norm_sqr() + r.norm_sqr() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Largest negative-index Fourier coefficient of `T_e`.
    pub fn negative_residual(&self) -> f64 {
        self.coeffs.max_abs_below(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_symbol_gives_one() {
        let grid = CircleGrid::new(64).unwrap();
        let o = build_outer(&SymbolData::zero(&grid), &Tolerances::default()).unwrap();
        assert_eq!(o.value_at_zero(), 1.0);
        assert!(o.values().iter().all(|v| (v - 1.0).norm() < 1e-15));
    }

    #[test]
    fn constant_modulus_gives_constant() {
        let grid = CircleGrid::new(64).unwrap();
        let s = SymbolData::from_expression(&grid, "0.6*conj(t)").unwrap();
        let o = build_outer(&s, &Tolerances::default()).unwrap();
        assert!((o.value_at_zero() - 0.8).abs() < 1e-15);
        assert!(o.values().iter().all(|v| (v - 0.8).norm() < 1e-14));
        assert!((o.eval(C64::new(0.3, -0.2)) - 0.8).norm() < 1e-14);
    }

    #[test]
    fn smooth_symbol_outer_is_analytic_with_right_modulus() {
        let grid = CircleGrid::new(1024).unwrap();
        let s = SymbolData::from_expression(&grid, "0.5*conj(t)/(1-0.3*conj(t)) + 0.2*t^2").unwrap();
        let o = build_outer(&s, &Tolerances::default()).unwrap();
        assert!(o.modulus_residual(&s) < 1e-8);
        assert!(o.negative_residual() < 1e-8);
        // value at the origin equals the geometric mean of |T_e|
        let mean_log = s.values().iter().map(|r| 0.5 * (1.0 - r.norm_sqr()).ln()).sum::<f64>() / 1024.0;
        assert!((o.value_at_zero() - mean_log.exp()).abs() < 1e-14);
        // interior evaluation agrees with the Taylor series of T_e itself
        let z = C64::new(0.2, 0.35);
        assert!((o.eval(z) - o.coeffs().eval_analytic(z)).norm() < 1e-12);
    }

    #[test]
    fn touching_symbol_is_rejected() {
        let grid = CircleGrid::new(16).unwrap();
        let mut values = vec![C64::new(0.5, 0.0); 16];
        values[5] = C64::new(1.0, 0.0);
        let s = SymbolData::from_values(&grid, values).unwrap();
        assert!(matches!(build_outer(&s, &Tolerances::default()), Err(Error::SzegoViolation { node: 5, .. })));
    }
}
