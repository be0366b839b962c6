use super::{MassSet, OuterData};
use crate::{Error, Result, Tolerances, C64};

fn factor(zero: C64, z: C64) -> C64 {
    if zero.norm() == 0.0 {
        return z;
    }
    (zero - z) / (C64::new(1.0, 0.0) - zero.conj() * z) * (zero.norm() / zero)
}

/// `B(z) = Π (ζ_k - z)/(1 - conj(ζ_k) z) · |ζ_k|/ζ_k`, with the factor `z` for `ζ_k = 0`.
pub fn blaschke_value(points: &[C64], z: C64) -> C64 {
    points.iter().map(|&p| factor(p, z)).product()
}

/// `B'(ζ_k)` by the product rule: the derivative of the k-th factor at its own
/// zero, `-(|ζ_k|/ζ_k)/(1 - |ζ_k|²)`, times the remaining factors.
pub fn blaschke_derivative(points: &[C64], k: usize) -> C64 {
    let zk = points[k];
    let own = if zk.norm() == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        -(zk.norm() / zk) / (1.0 - zk.norm_sqr())
    };
    let rest: C64 = points.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &p)| factor(p, zk)).product();
    own * rest
}

/// The Blaschke product of a mass set together with `T = T_e / B`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeData {
    points: Vec<C64>,
    values: Vec<C64>,
    derivatives: Vec<C64>,
    value_at_zero: f64,
    t_values: Vec<C64>,
    t_at_zero: f64,
}

pub fn build_blaschke(masses: &MassSet, outer: &OuterData) -> Result<BlaschkeData> {
    let points = masses.points().to_vec();
    let derivatives: Vec<C64> = (0..points.len()).map(|k| blaschke_derivative(&points, k)).collect();
    for (k, d) in derivatives.iter().enumerate() {
        if d.norm() == 0.0 {
            let second = (0..points.len()).find(|&j| j != k && points[j] == points[k]).unwrap_or(k);
            return Err(Error::DuplicatePoint { first: k, second });
        }
    }
    let values: Vec<C64> = outer.grid().nodes().iter().map(|&t| blaschke_value(&points, t)).collect();
    let t_values = outer.values().iter().zip(&values).map(|(te, b)| te / b).collect();
    let value_at_zero: f64 = points.iter().map(|p| p.norm()).product();
    let t_at_zero = outer.value_at_zero() / value_at_zero;
    Ok(BlaschkeData { points, values, derivatives, value_at_zero, t_values, t_at_zero })
}

impl BlaschkeData {
    pub fn points(&self) -> &[C64] {
        &self.points
    }

    pub fn eval(&self, z: C64) -> C64 {
        blaschke_value(&self.points, z)
    }

    /// `B` on the grid.
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// `B'(ζ_k)` for every zero.
    pub fn derivatives(&self) -> &[C64] {
        &self.derivatives
    }

    /// `B(0) = Π |ζ_k|`.
    pub fn value_at_zero(&self) -> f64 {
        self.value_at_zero
    }

    /// `T = T_e / B` on the grid.
    pub fn t_values(&self) -> &[C64] {
        &self.t_values
    }

    /// `T(0) = T_e(0) / B(0)`; infinite when the origin is a zero of `B`.
    pub fn t_at_zero(&self) -> f64 {
        self.t_at_zero
    }

    /// `max_j | |B(t_j)| - 1 |`.
    pub fn unimodularity_residual(&self) -> f64 {
        self.values.iter().map(|b| (b.norm() - 1.0).abs()).fold(0.0, f64::max)
    }

    /// `max_k |B(ζ_k)|`.
    pub fn zero_residual(&self) -> f64 {
        self.points.iter().map(|&z| self.eval(z).norm()).fold(0.0, f64::max)
    }

    pub fn satisfies_invariants(&self, tol: &Tolerances) -> bool {
        self.unimodularity_residual() < tol.blaschke && self.zero_residual() < tol.blaschke
    }
}
