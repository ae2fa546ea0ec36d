//! Genus one: derivations of Lie[a,b], Tsunogai's ε_k with their sl₂
//! action, the elliptic lift σ_w of g_w and its arithmetic part z_w.

pub mod ansatz;
pub mod derivation;
pub mod eps;
pub mod tau;

pub use ansatz::{ansatz_words, decompose, expansion, split_key, z_w, Expansion, KeySplit};
pub use derivation::Derivation;
pub use eps::{eps0, eps0_vee, eps_kj, epsilon, h, EpsExpr, EpsSym};
pub use tau::{build_tau, partner, sigma, t01, t12, tau};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenusOneError {
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("τ(a) is not push-invariant in degree {0}")]
    NotPushInvariant(usize),
    #[error("derivation does not annihilate [a,b] in degree {0}")]
    NotInDer0(usize),
    #[error("no ε-bracket solution in degree {0}")]
    Inconsistent(usize),
    #[error("z_{0} does not commute with ε₀^∨")]
    SingletResidual(usize),
}
