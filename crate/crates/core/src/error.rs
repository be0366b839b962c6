use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid size {size} must be a power of two and at least 8")]
    InvalidGrid { size: usize },

    #[error("symbol is not contractive: sup |R| = {sup_modulus}")]
    NotContractive { sup_modulus: f64 },

    #[error("Szegő condition violated at node {node}: 1 - |R|² = {margin:e}")]
    SzegoViolation { node: usize, margin: f64 },

    #[error("invalid mass set: {0}")]
    InvalidMass(String),

    #[error("mass points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("Gram matrix is not positive definite (min eigenvalue estimate {min_eig:e}); try rho < 1 or a finer grid")]
    NotPositiveDefinite { min_eig: f64 },

    #[error("operation requires an analytic (monomial) basis")]
    WrongBasis,

    #[error("evaluation point with modulus {modulus} is not inside the open disk")]
    RejectBoundary { modulus: f64 },

    #[error("invalid shift {shift}: {reason}")]
    InvalidShift { shift: i64, reason: String },

    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),

    #[error("Blaschke derivative at point {index} is degenerate (|B'| = {modulus:e})")]
    DegenerateDerivative { index: usize, modulus: f64 },

    #[error("grid mismatch: expected {expected}, found {found}")]
    GridMismatch { expected: usize, found: usize },

    #[error("order violation in {what}: margin {margin:e}")]
    OrderViolation { what: String, margin: f64 },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}
