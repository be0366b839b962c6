//! The metric `D(α) = I - Γ*Γ + Σ ν_k δ_{ζ_k}` as Gram matrices on truncated
//! monomial and Laurent bases, together with the shifted (`α_n`) and
//! regularized (`α^N`, `α^ρ`) data.

mod data;
mod gram;
mod l2r;

pub use data::{EffectiveData, SpaceData};
pub use gram::{build_gram_analytic, build_gram_laurent, build_hankel, embed_h2, BasisKind, GramMatrix, HankelBlock};
pub use l2r::{canonical_second_component, check_l2r_membership, L2rReport};
