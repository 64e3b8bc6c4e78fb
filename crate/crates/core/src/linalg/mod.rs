//! Exact linear algebra over the Gaussian rationals ℚ(i).
//!
//! Every subspace computation in the crate bottoms out here: row reduction,
//! kernels, conjugate transposes and Kronecker products, all exact.

mod matrix;
mod scalar;

pub use matrix::{RationalMatrix, Rref};
pub use scalar::{GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
}
