//! Perturbed Hardy spaces `H²(α)` built from a contractive symbol `R` (through
//! the metric `I − Γ*Γ` of its Hankel operator) and a finite family of point
//! masses inside the unit disk.
//!
//! The crate computes reproducing kernels of truncated versions of these
//! spaces, the dual data `α^τ` together with the unitary involution `τ`
//! between the associated `L²` spaces, and the scalar duality identity
//! `T(0)·K^{α₋₁}(0)·K^{α^τ}(0) = 1` that links them.
//!
//! Module map:
//!
//! * [`circle`]: grids on the unit circle, Fourier coefficients, Riesz
//!   projections, outer functions and Blaschke products.
//! * [`spaces`]: shifted/regularized data and the Gram matrices of the metric.
//! * [`kernels`]: kernel values, orthonormal systems, asymptotic sweeps and
//!   sandwich bounds.
//! * [`duality`]: dual data, the `τ` map, membership checks and the duality
//!   identity.
//! * [`oracle`]: slow reference computations used to cross-check the above.

pub mod circle;
pub mod duality;
pub mod error;
pub mod kernels;
pub mod oracle;
pub mod spaces;
pub mod tolerances;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use tolerances::Tolerances;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;

/// Version of this crate, recorded in run reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
