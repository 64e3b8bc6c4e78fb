use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{GaussianRational, RationalMatrix};

use super::{LatticeError, Subspace};

/// Rank-deficient draws are rejected and redrawn at most this many times.
pub const MAX_REDRAWS: usize = 1000;

/// Default bound on |re| and |im| of sampled Gaussian-integer entries.
pub const DEFAULT_ENTRY_BOUND: i64 = 3;

/// Seeded random subspace of exactly dimension `dim`.
pub fn random_subspace(ambient: usize, dim: usize, seed: u64, entry_bound: i64) -> Result<Subspace, LatticeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_subspace_with(&mut rng, ambient, dim, entry_bound)
}

/// Draws `dim` vectors with Gaussian-integer entries in `[-bound, bound]`
/// (both parts) until they are independent.
pub fn random_subspace_with<R: Rng + ?Sized>(
    rng: &mut R,
    ambient: usize,
    dim: usize,
    entry_bound: i64,
) -> Result<Subspace, LatticeError> {
    if ambient == 0 {
        return Err(LatticeError::ZeroAmbient);
    }
    if dim > ambient {
        return Err(LatticeError::DimTooLarge { dim, ambient });
    }
    if dim == 0 {
        return Subspace::zero(ambient);
    }
    if dim == ambient {
        return Subspace::full(ambient);
    }
    let bound = entry_bound.max(1);
    for _ in 0..MAX_REDRAWS {
        let rows = (0..dim)
            .map(|_| {
                (0..ambient)
                    .map(|_| {
                        GaussianRational::from_integers(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound))
                    })
                    .collect()
            })
            .collect();
        let m = RationalMatrix::from_rows(rows, ambient).expect("rectangular by construction");
        let s = Subspace::from_matrix(&m);
        if s.dim() == dim {
            return Ok(s);
        }
    }
    Err(LatticeError::SamplingExhausted { ambient, dim, attempts: MAX_REDRAWS })
}
