//! Exact square rational matrices, with just enough structure for working
//! inside `O(n)`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("reflection along the zero vector")]
    ZeroVector,
}

/// Connected component of `O(n)` containing a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrthComponent {
    /// `SO(n)`, determinant `+1`.
    SOn,
    /// `O(n)⁻`, determinant `-1`.
    OMinus,
}

impl OrthComponent {
    /// The `Z_2` coordinate: 0 for the identity component.
    pub fn bit(self) -> bool {
        matches!(self, OrthComponent::OMinus)
    }

    pub fn from_bit(bit: bool) -> Self {
        if bit {
            OrthComponent::OMinus
        } else {
            OrthComponent::SOn
        }
    }
}

/// Dense `n x n` matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(LinalgError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            entries.extend(r);
        }
        Ok(RatMatrix { n, entries })
    }

    /// Convenience constructor for integer matrices.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn diag_i64(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, Rational::from_integer(x.into()));
        }
        m
    }

    /// Block-diagonal matrix with the given blocks along the diagonal.
    pub fn block_diag(blocks: &[&RatMatrix]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.n;
        }
        m
    }

    /// Householder-type reflection `I - 2 u uᵀ / (uᵀu)` across the hyperplane
    /// orthogonal to `u`.
    pub fn reflection(u: &[Rational]) -> Result<Self, LinalgError> {
        let norm: Rational = u.iter().map(|x| x * x).sum();
        if norm.is_zero() {
            return Err(LinalgError::ZeroVector);
        }
        let n = u.len();
        let factor = Rational::from_integer(2.into()) / norm;
        let mut m = Self::identity(n);
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j) - &factor * &u[i] * &u[j];
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        // chunks(0) panics, and a 0x0 matrix has no rows anyway
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    fn same_size(&self, other: &Self) -> Result<(), LinalgError> {
        if self.n != other.n {
            Err(LinalgError::SizeMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_size(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_neg_identity(&self) -> bool {
        *self == Self::identity(self.n).neg()
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] / &p;
                for j in col..n {
                    let v = &f * &a[col * n + j];
                    a[r * n + j] -= v;
                }
            }
        }
        det
    }

    /// True iff `AᵀA = I` exactly.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in i..n {
                let dot: Rational = (0..n).map(|k| self.get(k, i) * self.get(k, j)).sum();
                let expected = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if dot != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Component of `O(n)` containing the matrix, read off the determinant.
    pub fn component(&self) -> Result<OrthComponent, LinalgError> {
        if !self.is_orthogonal() {
            return Err(LinalgError::NotOrthogonal);
        }
        Ok(OrthComponent::from_bit(self.det() != Rational::one()))
    }

    /// Group commutator `A B A⁻¹ B⁻¹` of two orthogonal matrices, with
    /// inverses taken as transposes.
    pub fn commutator(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_size(other)?;
        if !self.is_orthogonal() || !other.is_orthogonal() {
            return Err(LinalgError::NotOrthogonal);
        }
        self.mul(other)?
            .mul(&self.transpose())?
            .mul(&other.transpose())
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}
