//! Reproducing kernels of truncated spaces and the quantities built from them.

mod sandwich;
mod sweep;
mod system;
mod vector;

pub use sandwich::{sandwich_check, sandwich_report, SandwichReport};
pub use sweep::{asymptotic_sweep, kernel_value, AsymptoticTrace, TraceEntry};
pub use system::{orthonormal_system, OrthonormalSystem};
pub use vector::{kernel_at_origin, kernel_at_point, KernelVector};
