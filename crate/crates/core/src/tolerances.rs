use serde::{Deserialize, Serialize};

/// Numerical thresholds shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Allowed excess of `sup |R|` over 1.
    pub unit: f64,
    /// Nodes with `1 - |R|` below this are reported as touching the unit circle.
    pub touch: f64,
    /// Modulus identity and analyticity of the outer function.
    pub outer: f64,
    /// Unimodularity of `B` on the grid and vanishing at the zeros.
    pub blaschke: f64,
    /// Smallest admissible eigenvalue of a Gram matrix.
    pub psd: f64,
    /// Slack for the kernel-value orderings.
    pub order: f64,
    /// Membership threshold for the `Ĥ²` conditions.
    pub hat: f64,
    /// Membership threshold for the `L²_R` conditions.
    pub l2r: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            unit: 1e-12,
            touch: 1e-10,
            outer: 1e-8,
            blaschke: 1e-8,
            psd: 1e-12,
            order: 1e-10,
            hat: 1e-6,
            l2r: 1e-10,
        }
    }
}
