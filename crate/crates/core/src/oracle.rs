//! Slow reference computations that share no code with the production paths:
//! trapezoidal quadrature on a refined grid with a hand-written FFT,
//! finite differences, a Jacobi eigensolver and a KKT solve for the extremal
//! problem. Agreement with these is evidence, not tautology.

use std::f64::consts::PI;

use nalgebra::DMatrix;

use crate::{Error, Result, C64};

/// Trapezoidal rule on `refinement × base` equispaced nodes.
#[derive(Debug, Clone)]
pub struct QuadratureContext {
    base: usize,
    refinement: usize,
    nodes: Vec<C64>,
}

impl QuadratureContext {
    pub fn new(base: usize, refinement: usize) -> Result<Self> {
        let size = base * refinement;
        if refinement < 2 || !size.is_power_of_two() {
            return Err(Error::InvalidGrid { size });
        }
        let nodes = (0..size).map(|j| C64::from_polar(1.0, 2.0 * PI * j as f64 / size as f64)).collect();
        Ok(Self { base, refinement, nodes })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn refinement(&self) -> usize {
        self.refinement
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[C64] {
        &self.nodes
    }

    pub fn sample(&self, f: impl Fn(C64) -> C64) -> Vec<C64> {
        self.nodes.iter().map(|&t| f(t)).collect()
    }

    /// `P_-(f)` of grid samples, by a full FFT round trip.
    pub fn antianalytic_part(&self, values: &[C64]) -> Vec<C64> {
        let n = values.len();
        let mut c = fft(values, false);
        for (j, cj) in c.iter_mut().enumerate() {
            // index j holds the coefficient of t^j for j < n/2 and of t^(j-n) otherwise
            if j < n / 2 {
                *cj = C64::new(0.0, 0.0);
            }
        }
        fft(&c, true).into_iter().map(|v| v / n as f64).collect()
    }

    /// Fourier coefficient `∫ f(t) t^{-p} dm(t)`.
    pub fn coefficient(&self, f: impl Fn(C64) -> C64, p: i64) -> C64 {
        let n = self.size() as f64;
        self.nodes.iter().map(|&t| f(t) * t.powi(-p as i32)).sum::<C64>() / n
    }

    /// `∫ exp(½ log(1 - |R|²)) dm`, i.e. the value at the origin of the outer function.
    pub fn outer_at_zero(&self, symbol: impl Fn(C64) -> C64) -> f64 {
        let n = self.size() as f64;
        (self.nodes.iter().map(|&t| 0.5 * (1.0 - symbol(t).norm_sqr()).ln()).sum::<f64>() / n).exp()
    }

    /// Canonical vector `(z^p, -P_-(R z^p))` on the refined grid.
    fn canonical_monomial(&self, r: &[C64], p: i64) -> Vec<[C64; 2]> {
        let rf: Vec<C64> = self.nodes.iter().zip(r).map(|(t, r)| r * t.powi(p as i32)).collect();
        let minus = self.antianalytic_part(&rf);
        self.nodes.iter().zip(minus).map(|(t, m)| [t.powi(p as i32), -m]).collect()
    }

    fn metric_weight(r: &[C64]) -> Vec<[[C64; 2]; 2]> {
        let one = C64::new(1.0, 0.0);
        r.iter().map(|r| [[one, r.conj()], [*r, one]]).collect()
    }

    /// Gram matrix of the monomials `indices` in `L²_R ⊕ L²_ν`, with entry `(m, l) = ⟨z^l, z^m⟩`;
    /// the mass part uses `z^p` evaluated at the points.
    pub fn gram(&self, symbol: impl Fn(C64) -> C64, indices: &[i64], points: &[C64], weights: &[f64]) -> Result<DMatrix<C64>> {
        let r = self.sample(symbol);
        let w = Self::metric_weight(&r);
        let vecs: Vec<_> = indices.iter().map(|&p| self.canonical_monomial(&r, p)).collect();
        let n = indices.len();
        let mut g = DMatrix::<C64>::zeros(n, n);
        for m in 0..n {
            for l in 0..n {
                let mut s = quad_inner(&vecs[l], &vecs[m], &w)?;
                for (z, nu) in points.iter().zip(weights) {
                    s += nu * z.powi(indices[l] as i32) * z.powi(indices[m] as i32).conj();
                }
                g[(m, l)] = s;
            }
        }
        Ok(g)
    }

    /// Analytic Gram on `z^0 ..= z^degree`.
    pub fn gram_analytic(&self, symbol: impl Fn(C64) -> C64, degree: usize, points: &[C64], weights: &[f64]) -> Result<DMatrix<C64>> {
        let indices: Vec<i64> = (0..=degree as i64).collect();
        self.gram(symbol, &indices, points, weights)
    }

    /// Laurent block on `z^-M ..= z^M` followed by `diag(ν)`.
    pub fn gram_laurent(&self, symbol: impl Fn(C64) -> C64, half_band: usize, weights: &[f64]) -> Result<DMatrix<C64>> {
        let m = half_band as i64;
        let indices: Vec<i64> = (-m..=m).collect();
        let block = self.gram(symbol, &indices, &[], &[])?;
        let l = indices.len();
        let mut g = DMatrix::<C64>::zeros(l + weights.len(), l + weights.len());
        g.view_mut((0, 0), (l, l)).copy_from(&block);
        for (k, w) in weights.iter().enumerate() {
            g[(l + k, l + k)] = C64::new(*w, 0.0);
        }
        Ok(g)
    }
}

/// Recursive radix-2 DFT: `X_k = Σ x_j e^{∓2πijk/n}` (minus sign unless `inverse`).
pub fn fft(x: &[C64], inverse: bool) -> Vec<C64> {
    let n = x.len();
    if n == 1 {
        return x.to_vec();
    }
    assert!(n.is_power_of_two(), "oracle fft needs a power of two");
    let even: Vec<C64> = x.iter().step_by(2).copied().collect();
    let odd: Vec<C64> = x.iter().skip(1).step_by(2).copied().collect();
    let (e, o) = (fft(&even, inverse), fft(&odd, inverse));
    let sign = if inverse { 1.0 } else { -1.0 };
    let mut out = vec![C64::new(0.0, 0.0); n];
    for k in 0..n / 2 {
        let tw = C64::from_polar(1.0, sign * 2.0 * PI * k as f64 / n as f64) * o[k];
        out[k] = e[k] + tw;
        out[k + n / 2] = e[k] - tw;
    }
    out
}

/// Trapezoidal `∫ (W f)·conj(g) dm` for vector-valued samples.
pub fn quad_inner(f: &[[C64; 2]], g: &[[C64; 2]], w: &[[[C64; 2]; 2]]) -> Result<C64> {
    if f.len() != g.len() || f.len() != w.len() {
        return Err(Error::GridMismatch { expected: f.len(), found: if g.len() != f.len() { g.len() } else { w.len() } });
    }
    let s: C64 = f
        .iter()
        .zip(g)
        .zip(w)
        .map(|((f, g), w)| {
            let a = w[0][0] * f[0] + w[0][1] * f[1];
            let b = w[1][0] * f[0] + w[1][1] * f[1];
            a * g[0].conj() + b * g[1].conj()
        })
        .sum();
    Ok(s / f.len() as f64)
}

/// Central difference with one Richardson step.
pub fn fd_derivative(f: impl Fn(C64) -> C64, z: C64, step: f64) -> C64 {
    let d = |h: f64| (f(z + h) - f(z - h)) / (2.0 * h);
    (d(step / 2.0) * 4.0 - d(step)) / 3.0
}

/// Smallest eigenvalue of a Hermitian matrix by cyclic Jacobi rotations on its real embedding.
pub fn dense_psd_check(matrix: &DMatrix<C64>) -> Result<f64> {
    let n = matrix.nrows();
    let scale = matrix.iter().map(|c| c.norm()).fold(1.0, f64::max);
    let deviation = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (matrix[(i, j)] - matrix[(j, i)].conj()).norm())
        .fold(0.0, f64::max);
    if matrix.ncols() != n || deviation > 1e-12 * scale {
        return Err(Error::NotHermitian { deviation });
    }
    // [[Re, -Im], [Im, Re]] has the spectrum of the matrix, each eigenvalue twice.
    let m = 2 * n;
    let mut a = vec![vec![0.0; m]; m];
    for i in 0..n {
        for j in 0..n {
            let c = matrix[(i, j)];
            a[i][j] = c.re;
            a[i + n][j + n] = c.re;
            a[i][j + n] = -c.im;
            a[i + n][j] = c.im;
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off.sqrt() < 1e-15 * scale {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..m {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Ok((0..m).map(|i| a[i][i]).fold(f64::INFINITY, f64::min))
}

/// `min { c^H G c : c_0 = 1 }` from the KKT system `[[G, e_0], [e_0^T, 0]] [c; λ] = [0; 1]`,
/// solved by Gaussian elimination with partial pivoting.
pub fn constrained_minimum_at_origin(gram: &DMatrix<C64>) -> Result<f64> {
    let n = gram.nrows();
    let m = n + 1;
    let mut a = vec![vec![C64::new(0.0, 0.0); m + 1]; m];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = gram[(i, j)];
        }
    }
    a[0][n] = C64::new(1.0, 0.0);
    a[n][0] = C64::new(1.0, 0.0);
    a[n][m] = C64::new(1.0, 0.0);
    for col in 0..m {
        let pivot = (col..m).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())).unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Err(Error::NotPositiveDefinite { min_eig: 0.0 });
        }
        a.swap(col, pivot);
        for row in col + 1..m {
            let f = a[row][col] / a[col][col];
            for k in col..=m {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
        }
    }
    let mut x = vec![C64::new(0.0, 0.0); m];
    for i in (0..m).rev() {
        let s: C64 = (i + 1..m).map(|k| a[i][k] * x[k]).sum();
        x[i] = (a[i][m] - s) / a[i][i];
    }
    let c = nalgebra::DVector::from_column_slice(&x[..n]);
    Ok((c.adjoint() * gram * &c)[(0, 0)].re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fft_matches_naive_dft() {
        let x: Vec<C64> = (0..16).map(|j| C64::new(j as f64, (j * j) as f64 * 0.1)).collect();
        let y = fft(&x, false);
        for (k, yk) in y.iter().enumerate() {
            let naive: C64 = x.iter().enumerate().map(|(j, xj)| xj * C64::from_polar(1.0, -2.0 * PI * (j * k) as f64 / 16.0)).sum();
            assert!((yk - naive).norm() < 1e-10);
        }
    }

    #[test]
    fn quadrature_basics() {
        let q = QuadratureContext::new(32, 2).unwrap();
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        let id = vec![[[one, zero], [zero, one]]; 64];
        let ones = vec![[one, zero]; 64];
        assert!((quad_inner(&ones, &ones, &id).unwrap() - one).norm() < 1e-15);
        let z: Vec<_> = q.nodes().iter().map(|t| [*t, zero]).collect();
        let z2: Vec<_> = q.nodes().iter().map(|t| [t * t, zero]).collect();
        assert!(quad_inner(&z, &z2, &id).unwrap().norm() < 1e-15);
        assert!(quad_inner(&z, &z2[1..], &id).is_err());
        assert!(QuadratureContext::new(32, 1).is_err());
    }

    #[test]
    fn hankel_gram_diagonal() {
        let q = QuadratureContext::new(64, 2).unwrap();
        let g = q.gram_analytic(|t| t.conj() * 0.6, 3, &[], &[]).unwrap();
        for m in 0..4 {
            for l in 0..4 {
                let expect = if m != l { 0.0 } else if m == 0 { 0.64 } else { 1.0 };
                assert!((g[(m, l)] - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn derivatives() {
        assert!(fd_derivative(|_| C64::new(2.0, 1.0), C64::new(0.3, 0.0), 1e-3).norm() < 1e-14);
        let d = fd_derivative(|z| z * z, C64::new(1.0 / 3.0, 0.0), 1e-3);
        assert!((d - C64::new(2.0 / 3.0, 0.0)).norm() < 1e-10);
        let half = C64::new(0.5, 0.0);
        let b = fd_derivative(|z| (half - z) / (C64::new(1.0, 0.0) - half * z), half, 1e-3);
        assert!((b - C64::new(-4.0 / 3.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn eigen_checks() {
        let mut m = DMatrix::<C64>::identity(2, 2);
        assert!((dense_psd_check(&m).unwrap() - 1.0).abs() < 1e-14);
        m[(0, 0)] = C64::new(0.64, 0.0);
        assert!((dense_psd_check(&m).unwrap() - 0.64).abs() < 1e-14);
        m[(0, 1)] = C64::new(0.0, 0.3);
        m[(1, 0)] = C64::new(0.0, 0.3);
        assert!(matches!(dense_psd_check(&m), Err(Error::NotHermitian { .. })));
        m[(1, 0)] = C64::new(0.0, -0.3);
        let (a, b, c) = (0.64f64, 1.0, 0.09);
        let exact = 0.5 * (a + b) - (0.25 * (a - b) * (a - b) + c).sqrt();
        assert!((dense_psd_check(&m).unwrap() - exact).abs() < 1e-13);
    }

    #[test]
    fn kkt_minimum() {
        let g = DMatrix::<C64>::from_fn(3, 3, |m, l| C64::new(if m == l { 1.0 } else { 0.0 } + 3.0 * 0.5f64.powi((m + l) as i32), 0.0));
        let got = constrained_minimum_at_origin(&g).unwrap();
        // eliminating c_0 gives the Schur complement of the trailing block
        let rest = g.view((1, 1), (2, 2)).clone_owned();
        let col = g.view((1, 0), (2, 1)).clone_owned();
        let schur = g[(0, 0)] - (col.adjoint() * rest.try_inverse().unwrap() * &col)[(0, 0)];
        assert!((got - schur.re).abs() < 1e-13);
    }
}
