use serde::Serialize;

use super::SymbolData;
use crate::{Error, Result, Tolerances};

/// Outcome of the contractivity and log-integrability audit of a symbol.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SzegoReport {
    pub is_contractive: bool,
    /// Grid mean of `log(1 - |R|)`; `-inf` when some node has `|R| = 1`.
    pub log_integral: f64,
    /// Nodes where `1 - |R(t_j)| < tol.touch`.
    pub touching_nodes: Vec<usize>,
    pub sup_modulus: f64,
}

pub fn validate_szego(symbol: &SymbolData, tol: &Tolerances) -> Result<SzegoReport> {
    let sup = symbol.sup_modulus();
    if sup > 1.0 + tol.unit || !sup.is_finite() {
        return Err(Error::NotContractive { sup_modulus: sup });
    }
    let mut touching = Vec::new();
    let mut sum = 0.0;
    for (j, v) in symbol.values().iter().enumerate() {
        let gap = 1.0 - v.norm();
        if gap < tol.touch {
            touching.push(j);
        }
        sum += gap.max(0.0).ln();
    }
    if !touching.is_empty() {
        log::warn!("symbol is (nearly) unimodular at {} grid node(s)", touching.len());
    }
    Ok(SzegoReport {
        is_contractive: true,
        log_integral: sum / symbol.values().len() as f64,
        touching_nodes: touching,
        sup_modulus: sup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::CircleGrid;
    use crate::C64;

    #[test]
    fn zero_symbol() {
        let grid = CircleGrid::new(64).unwrap();
        let r = validate_szego(&SymbolData::zero(&grid), &Tolerances::default()).unwrap();
        assert!(r.is_contractive);
        assert_eq!(r.log_integral, 0.0);
        assert!(r.touching_nodes.is_empty());
    }

    #[test]
    fn constant_modulus_symbol() {
        let grid = CircleGrid::new(64).unwrap();
        let s = SymbolData::from_expression(&grid, "0.6*conj(t)").unwrap();
        let r = validate_szego(&s, &Tolerances::default()).unwrap();
        assert!((r.log_integral - 0.4f64.ln()).abs() < 1e-14);
        assert!((r.log_integral + 0.916290731874155).abs() < 1e-12);
    }

    #[test]
    fn touching_node_is_listed() {
        let grid = CircleGrid::new(16).unwrap();
        let mut values = vec![C64::new(0.5, 0.0); 16];
        values[3] = C64::new(0.0, 1.0);
        let s = SymbolData::from_values(&grid, values).unwrap();
        let r = validate_szego(&s, &Tolerances::default()).unwrap();
        assert_eq!(r.touching_nodes, vec![3]);
        assert!(r.log_integral.is_infinite());
    }

    #[test]
    fn rejects_non_contraction() {
        let grid = CircleGrid::new(16).unwrap();
        let s = SymbolData::from_expression(&grid, "1.01*t").unwrap();
        assert!(matches!(validate_szego(&s, &Tolerances::default()), Err(Error::NotContractive { .. })));
    }
}
