use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::GaussianRational;
use super::LinalgError;

/// Dense row-major matrix over ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Output of [`RationalMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>, cols: usize) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRow { row: i, expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { rows: n_rows, cols, entries })
    }

    /// Convenience constructor from `(re, im)` integer pairs.
    pub fn from_int_rows(rows: &[&[(i64, i64)]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&(a, b)| GaussianRational::from_integers(a, b)).collect())
            .collect();
        Self::from_rows(rows, cols).expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    /// First `n` rows.
    pub fn top_rows(&self, n: usize) -> Self {
        let n = n.min(self.rows);
        Self { rows: n, cols: self.cols, entries: self.entries[..n * self.cols].to_vec() }
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|z| z.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    /// M†, with (M†)ᵢⱼ = conj(Mⱼᵢ).
    pub fn conj_transpose(&self) -> Self {
        self.transpose().conj()
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "matmul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// M·v for a column vector v.
    pub fn apply(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "apply",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Kronecker product A ⊗ B.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form by Gauss-Jordan elimination. Pivots are
    /// normalized to 1 and zero rows trail, so the result is unique.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivot_cols = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead);
            let inv = m.get(lead, c).inv();
            for j in c..cols {
                let idx = lead * cols + j;
                if !m.entries[idx].is_zero() {
                    m.entries[idx] = &m.entries[idx] * &inv;
                }
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let pv = &m.entries[lead * cols + j];
                    if pv.is_zero() {
                        continue;
                    }
                    let delta = &factor * pv;
                    let idx = r * cols + j;
                    m.entries[idx] = &m.entries[idx] - &delta;
                }
            }
            pivot_cols.push(c);
            lead += 1;
        }
        Rref { matrix: m, rank: pivot_cols.len(), pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of {v : M·v = 0}, one vector per row, in canonical RREF.
    pub fn kernel(&self) -> Self {
        let Rref { matrix: r, rank, pivot_cols } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Self::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, GaussianRational::one());
            for (row, &pc) in pivot_cols.iter().enumerate().take(rank) {
                let v = r.get(row, f);
                if !v.is_zero() {
                    basis.set(k, pc, -v);
                }
            }
        }
        let canon = basis.rref();
        canon.matrix.top_rows(canon.rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, z) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{z}")?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.row_vecs().serialize(s)
    }
}

/// Deserializes a row-major array of arrays. An empty array yields a 0×0
/// matrix; callers that know the column count should fix it up.
impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<GaussianRational>>::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(rows, cols).map_err(D::Error::custom)
    }
}
