use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{GaussianRational, Rational, RationalMatrix};

use super::LatticeError;

/// Which tensor factor an embedded subspace occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `p ⊗ W`: the subspace is the left factor, the new space is appended on the right.
    Right,
    /// `V ⊗ p`: the new space is prepended on the left.
    Left,
}

/// A subspace of ℂⁿ, stored as the nonzero rows of its canonical RREF basis.
///
/// Two subspaces are equal exactly when their canonical bases are equal,
/// so `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
}

impl Subspace {
    /// Canonical subspace spanned by `vectors`; an empty list gives 𝟎.
    pub fn span(vectors: &[Vec<GaussianRational>], ambient: usize) -> Result<Self, LatticeError> {
        if ambient == 0 {
            return Err(LatticeError::ZeroAmbient);
        }
        if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != ambient) {
            return Err(LatticeError::VectorLength { index: i, expected: ambient, found: v.len() });
        }
        let m = RationalMatrix::from_rows(vectors.to_vec(), ambient).expect("lengths checked");
        Ok(Self::from_matrix(&m))
    }

    /// Row space of `m`, canonicalized. `m.cols()` is the ambient dimension.
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        assert!(m.cols() > 0, "subspace of a zero-dimensional space");
        let r = m.rref();
        Self { ambient: m.cols(), basis: r.matrix.top_rows(r.rank) }
    }

    /// The 0-subspace.
    pub fn zero(ambient: usize) -> Result<Self, LatticeError> {
        if ambient == 0 {
            return Err(LatticeError::ZeroAmbient);
        }
        Ok(Self { ambient, basis: RationalMatrix::zeros(0, ambient) })
    }

    /// The whole space ℂⁿ.
    pub fn full(ambient: usize) -> Result<Self, LatticeError> {
        if ambient == 0 {
            return Err(LatticeError::ZeroAmbient);
        }
        Ok(Self { ambient, basis: RationalMatrix::identity(ambient) })
    }

    /// Span of the standard basis vectors e_i for the given (0-based) indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self, LatticeError> {
        let vecs = indices
            .iter()
            .map(|&i| {
                let mut v = vec![GaussianRational::zero(); ambient];
                v[i] = GaussianRational::one();
                v
            })
            .collect::<Vec<_>>();
        Self::span(&vecs, ambient)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// dim(p) / dim(ambient).
    pub fn normalized_dim(&self) -> NormalizedDim {
        NormalizedDim(Rational::new(self.dim().into(), self.ambient.into()))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LatticeError> {
        if self.ambient != other.ambient {
            return Err(LatticeError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// M_p: a matrix whose kernel is exactly this subspace. Its rows are the
    /// conjugates of a basis of the orthocomplement.
    pub fn kernel_matrix(&self) -> RationalMatrix {
        self.ortho().basis.conj()
    }

    /// Intersection, computed as the common kernel of M_p and M_q.
    pub fn meet(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let stacked = self.kernel_matrix().vstack(&other.kernel_matrix()).expect("ambient checked");
        Ok(Self { ambient: self.ambient, basis: stacked.kernel() })
    }

    /// Span of the union.
    pub fn join(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis).expect("ambient checked")))
    }

    /// Orthogonal complement: all v with Σ conj(bᵢ)·vᵢ = 0 for every basis row b.
    pub fn ortho(&self) -> Self {
        if self.is_zero() {
            return Self { ambient: self.ambient, basis: RationalMatrix::identity(self.ambient) };
        }
        Self { ambient: self.ambient, basis: self.basis.conj().kernel() }
    }

    pub fn equals(&self, other: &Self) -> Result<bool, LatticeError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Containment p ≤ q, decided as meet(p, q) = p.
    pub fn leq(&self, other: &Self) -> Result<bool, LatticeError> {
        Ok(&self.meet(other)? == self)
    }

    /// Does the vector lie in this subspace?
    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool, LatticeError> {
        if v.len() != self.ambient {
            return Err(LatticeError::VectorLength { index: 0, expected: self.ambient, found: v.len() });
        }
        let probe = Self::span(&[v.to_vec()], self.ambient)?;
        probe.leq(self)
    }

    /// Canonical inclusion into ℂ^(ambient·factor): `p ⊗ ℂ^k` for
    /// [`Side::Right`], `ℂ^k ⊗ p` for [`Side::Left`].
    pub fn tensor_embed(&self, factor_dim: usize, side: Side) -> Result<Self, LatticeError> {
        if factor_dim == 0 {
            return Err(LatticeError::ZeroAmbient);
        }
        let id = RationalMatrix::identity(factor_dim);
        let m = match side {
            Side::Right => self.basis.kron(&id),
            Side::Left => id.kron(&self.basis),
        };
        if m.rows() == 0 {
            return Self::zero(self.ambient * factor_dim);
        }
        Ok(Self::from_matrix(&m))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of C^{}: {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} in C^{}", self.dim(), self.ambient)?;
        if self.dim() > 0 {
            write!(f, ", basis {{")?;
            for r in 0..self.dim() {
                if r > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "(")?;
                for (c, z) in self.basis.row(r).iter().enumerate() {
                    if c > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{z}")?;
                }
                write!(f, ")")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// dim(p)/dim(V), a rational in [0, 1].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalizedDim(pub Rational);

impl NormalizedDim {
    pub fn value(&self) -> &Rational {
        &self.0
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    ambient: usize,
    basis: Vec<Vec<GaussianRational>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SubspaceJson { ambient: self.ambient, basis: self.basis.row_vecs() }.serialize(s)
    }
}

/// Accepts any spanning set and canonicalizes it.
impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SubspaceJson::deserialize(d)?;
        Subspace::span(&raw.basis, raw.ambient).map_err(D::Error::custom)
    }
}
