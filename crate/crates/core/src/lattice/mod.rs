//! The subspace lattice of ℂⁿ: meet, join, orthocomplement, containment,
//! tensor embeddings and seeded sampling.

mod random;
mod subspace;

pub use random::{random_subspace, random_subspace_with, DEFAULT_ENTRY_BOUND, MAX_REDRAWS};
pub use subspace::{NormalizedDim, Side, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("ambient dimension must be at least 1")]
    ZeroAmbient,
    #[error("ambient dimensions differ: C^{left} vs C^{right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector {index} has length {found}, expected {expected}")]
    VectorLength { index: usize, expected: usize, found: usize },
    #[error("requested dimension {dim} exceeds ambient dimension {ambient}")]
    DimTooLarge { dim: usize, ambient: usize },
    #[error("no rank-{dim} draw in C^{ambient} after {attempts} attempts")]
    SamplingExhausted { ambient: usize, dim: usize, attempts: usize },
}
