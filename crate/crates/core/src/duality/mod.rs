//! Dual data `α^τ`, the involution `τ : L²(α) → L²(α^τ)`, the `Ĥ²`
//! membership conditions and the scalar duality identity.

mod dual;
mod identity;
mod membership;
mod metric;
mod tau;
mod theorem;

pub use dual::{build_dual, DualData, MassConvention};
pub use identity::{duality_identity, IdentityReport};
pub use membership::{check_hat_membership, HatChecker, HatMembershipReport};
pub use metric::L2Metric;
pub use tau::{apply_tau, Side, TauVector};
pub use theorem::{theorem_check, TheoremReport};
