//! Temperley-Lieb algebra on the noncrossing-diagram basis.
//!
//! Coefficients live in ℚ(d), exact. Floats appear only when a result is
//! specialized to d = 2cos(π/r).

mod algebra;
mod diagram;
mod element;
mod poly;
mod ratfunc;

pub use algebra::{
    delta, eval_at_root, generator_e, jones_wenzl, jw_at_root, jw_characterization_failure, markov_trace,
    relation_checks, root_params, NumericTLElement, RelationCheck, RootParams,
};
pub use diagram::PlanarDiagram;
pub use element::TLElement;
pub use poly::{chebyshev, ChebyshevPoly, Poly};
pub use ratfunc::RationalFunction;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TlError {
    #[error("generator index {i} out of range for {n} strands (need 1 <= i <= n-1)")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("strand count must be at least 1")]
    ZeroStrands,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at d = {at}")]
    Pole { at: f64 },
    #[error("root-of-unity level r must be at least 3, got {0}")]
    RootTooSmall(u32),
    #[error("Jones-Wenzl projectors at level r = {r} exist only for n = 1..{}, got n = {n}", r - 1)]
    BeyondRootBound { n: usize, r: u32 },
    #[error("Jones-Wenzl projector p_{n} failed verification: {reason}")]
    VerificationFailed { n: usize, reason: String },
}
