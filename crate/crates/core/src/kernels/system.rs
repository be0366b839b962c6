use nalgebra::DMatrix;
use rayon::prelude::*;

use super::kernel_at_origin;
use crate::spaces::{build_gram_analytic, build_gram_laurent, SpaceData};
use crate::{Error, Result, Tolerances, C64};

/// The vectors `e_n = ζ^n K^{α_n}` in a common coordinate system, and their Gram matrix.
#[derive(Debug, Clone)]
pub struct OrthonormalSystem {
    pub ns: Vec<i64>,
    /// One column per `n`; analytic coordinates `z^0 ..= z^D` when all `n ≥ 0`,
    /// Laurent ⊕ mass coordinates otherwise.
    pub vectors: DMatrix<C64>,
    pub gram: DMatrix<C64>,
}

impl OrthonormalSystem {
    /// `max |Gram - I|`.
    pub fn identity_defect(&self) -> f64 {
        let n = self.gram.nrows();
        (&self.gram - DMatrix::<C64>::identity(n, n)).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Builds each `K^{α_n}` on `z^0 ..= z^degree` and measures the system in the metric of `space`.
pub fn orthonormal_system(
    space: &SpaceData,
    ns: &[i64],
    degree: usize,
    hankel: Option<usize>,
    tol: &Tolerances,
) -> Result<OrthonormalSystem> {
    let (Some(&n_min), Some(&n_max)) = (ns.iter().min(), ns.iter().max()) else {
        return Err(Error::InvalidTruncation("empty index set for the orthonormal system".into()));
    };
    let kernels = ns
        .par_iter()
        .map(|&n| {
            let gram = build_gram_analytic(&space.shifted(n), degree, hankel, tol)?;
            let k = kernel_at_origin(&gram)?;
            let scale = C64::new(1.0 / k.norm, 0.0);
            Ok(k.coefficients.iter().map(|c| c * scale).collect::<Vec<C64>>())
        })
        .collect::<Result<Vec<_>>>()?;

    if n_min >= 0 {
        let total = degree + n_max as usize;
        let mut vectors = DMatrix::<C64>::zeros(total + 1, ns.len());
        for (col, (&n, k)) in ns.iter().zip(&kernels).enumerate() {
            for (p, c) in k.iter().enumerate() {
                vectors[(n as usize + p, col)] = *c;
            }
        }
        let gram = build_gram_analytic(space, total, hankel, tol)?;
        let system = vectors.adjoint() * gram.entries() * &vectors;
        return Ok(OrthonormalSystem { ns: ns.to_vec(), vectors, gram: system });
    }

    let half_band = (degree as i64 + n_max.max(0)).max(-n_min) as usize;
    let gram = build_gram_laurent(space, half_band, hankel, tol)?;
    let eff = space.effective_data()?;
    let laurent = 2 * half_band + 1;
    let mut vectors = DMatrix::<C64>::zeros(laurent + eff.points.len(), ns.len());
    for (col, (&n, k)) in ns.iter().zip(&kernels).enumerate() {
        for (p, c) in k.iter().enumerate() {
            vectors[((half_band as i64 + n) as usize + p, col)] = *c;
        }
        for (j, z) in eff.points.iter().enumerate() {
            let kz = k.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * z + c);
            vectors[(laurent + j, col)] = z.powi(n as i32) * kz;
        }
    }
    let system = vectors.adjoint() * gram.entries() * &vectors;
    Ok(OrthonormalSystem { ns: ns.to_vec(), vectors, gram: system })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{CircleGrid, MassSet, SymbolData};

    fn grid() -> CircleGrid {
        CircleGrid::new(512).unwrap()
    }

    #[test]
    fn classical_system_is_monomials() {
        let space = SpaceData::new(SymbolData::zero(&grid()), MassSet::empty());
        let sys = orthonormal_system(&space, &[0, 1, 2, 3], 10, None, &Tolerances::default()).unwrap();
        assert!(sys.identity_defect() < 1e-14);
    }

    #[test]
    fn mass_system_is_orthonormal() {
        let space = SpaceData::new(SymbolData::zero(&grid()), MassSet::single(C64::new(0.5, 0.0), 3.0).unwrap());
        let sys = orthonormal_system(&space, &[0, 1, 2, 3], 40, None, &Tolerances::default()).unwrap();
        assert!(sys.identity_defect() < 1e-10);
    }

    #[test]
    fn hankel_system_and_laurent_route() {
        let symbol = SymbolData::from_coefficients(&grid(), &[(-1, C64::new(0.6, 0.0))]).unwrap();
        let space = SpaceData::new(symbol, MassSet::single(C64::new(1.0 / 3.0, 0.0), 1.0).unwrap());
        let sys = orthonormal_system(&space, &[0, 1], 30, None, &Tolerances::default()).unwrap();
        assert!(sys.gram[(0, 1)].norm() < 1e-10);
        let mixed = orthonormal_system(&space, &[-2, -1, 0, 1, 2], 30, None, &Tolerances::default()).unwrap();
        assert!(mixed.identity_defect() < 1e-10, "{}", mixed.identity_defect());
    }
}
