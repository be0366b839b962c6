use super::{CircleGrid, FourierCoeffs};
use crate::C64;

/// Which half of the spectrum a Riesz projection keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    /// `P_+`: indices `≥ 0`.
    Analytic,
    /// `P_-`: indices `≤ -1`.
    Antianalytic,
}

impl Projection {
    fn keeps(self, p: i64) -> bool {
        match self {
            Projection::Analytic => p >= 0,
            Projection::Antianalytic => p < 0,
        }
    }
}

pub fn riesz_project(coeffs: &FourierCoeffs, sign: Projection) -> FourierCoeffs {
    let values = coeffs
        .iter()
        .map(|(p, c)| if sign.keeps(p) { c } else { C64::new(0.0, 0.0) })
        .collect();
    FourierCoeffs::new(coeffs.lo(), values)
}

/// Riesz projection of grid samples through the discrete Fourier transform.
/// The Nyquist index `-N/2` is treated as antianalytic.
pub fn riesz_project_values(grid: &CircleGrid, values: &[C64], sign: Projection) -> Vec<C64> {
    grid.synthesize(&riesz_project(&grid.forward(values), sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn antianalytic_filter() {
        let c = FourierCoeffs::from_pairs(&[(-1, C64::new(2.0, 1.0)), (0, C64::new(3.0, 0.0))]);
        let minus = riesz_project(&c, Projection::Antianalytic);
        assert_eq!(minus.get(-1), C64::new(2.0, 1.0));
        assert_eq!(minus.get(0), C64::new(0.0, 0.0));
    }

    #[test]
    fn grid_route_matches_coefficient_shift() {
        // P_-(R z^n) computed by FFT of samples vs by shifting the coefficients of R.
        let grid = CircleGrid::new(256).unwrap();
        let r = FourierCoeffs::from_pairs(&[
            (-3, C64::new(0.1, 0.2)),
            (-1, C64::new(0.4, 0.0)),
            (0, C64::new(0.05, 0.0)),
            (2, C64::new(0.0, 0.3)),
        ]);
        let rv = grid.synthesize(&r);
        for n in [-2i64, 0, 1, 3] {
            let f: Vec<C64> = rv.iter().zip(grid.nodes()).map(|(r, t)| r * t.powi(n as i32)).collect();
            let via_grid = grid.forward(&riesz_project_values(&grid, &f, Projection::Antianalytic));
            let via_shift = riesz_project(&r.shifted(n), Projection::Antianalytic);
            for p in -20..20 {
                assert!((via_grid.get(p) - via_shift.get(p)).norm() < 1e-14, "n={n} p={p}");
            }
        }
    }

    proptest! {
        #[test]
        fn projections_are_complementary_and_idempotent(
            lo in -10i64..0,
            parts in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..20),
        ) {
            let c = FourierCoeffs::new(lo, parts.iter().map(|&(a, b)| C64::new(a, b)).collect());
            let plus = riesz_project(&c, Projection::Analytic);
            let minus = riesz_project(&c, Projection::Antianalytic);
            for (p, v) in c.iter() {
                prop_assert_eq!(plus.get(p) + minus.get(p), v);
            }
            prop_assert_eq!(riesz_project(&plus, Projection::Analytic), plus.clone());
            prop_assert_eq!(riesz_project(&minus, Projection::Antianalytic), minus.clone());
            prop_assert_eq!(riesz_project(&plus, Projection::Antianalytic).l2_norm(), 0.0);
        }
    }
}
