use std::sync::Arc;

use super::LinearizedPoly;
use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElem};

/// Square matrix over `F_{q^n}`; built from a linearized polynomial it has
/// the circulant-Frobenius shape `entry(i, j) = a_{(j - i) mod n}^(q^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonMatrix {
    ctx: Arc<FieldCtx>,
    size: usize,
    entries: Vec<FieldElem>,
}

impl DicksonMatrix {
    pub(super) fn of(poly: &LinearizedPoly) -> Self {
        let ctx = poly.ctx();
        let n = ctx.n();
        let e = ctx.e();
        let mut entries = Vec::with_capacity(n * n);
        entries.extend_from_slice(poly.coeffs());
        for i in 1..n {
            let prev = (i - 1) * n;
            for j in 0..n {
                let src = entries[prev + (j + n - 1) % n].frobenius(e);
                entries.push(src);
            }
        }
        Self { ctx: Arc::clone(ctx), size: n, entries }
    }

    /// Arbitrary square matrix from its rows.
    pub fn from_rows(ctx: &Arc<FieldCtx>, rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::InvalidParameter("matrix is not square".into()));
            }
            for x in row {
                entries.push(ctx.adopt(&x)?);
            }
        }
        Ok(Self { ctx: Arc::clone(ctx), size, entries })
    }

    pub fn identity(ctx: &Arc<FieldCtx>, size: usize) -> Self {
        let mut entries = vec![ctx.zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = ctx.one();
        }
        Self { ctx: Arc::clone(ctx), size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElem]> {
        self.entries.chunks(self.size.max(1))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let x = self.entry(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        })
    }

    /// Whether the matrix has the Dickson shape of some linearized
    /// polynomial, i.e. equals the Dickson matrix of its first row.
    pub fn is_dickson(&self) -> bool {
        self.size == self.ctx.n()
            && LinearizedPoly::new(&self.ctx, self.row(0).to_vec()).is_ok_and(|l| l.dickson_matrix() == *self)
    }

    pub fn mul(&self, other: &DicksonMatrix) -> Result<DicksonMatrix> {
        if self.size != other.size || !self.ctx.same_arithmetic(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.ctx.zero();
                for k in 0..n {
                    let a = self.entry(i, k);
                    if !a.is_zero() {
                        acc = acc + a * other.entry(k, j);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Self { ctx: Arc::clone(&self.ctx), size: n, entries })
    }

    /// Determinant by Gaussian elimination, pivoting on the first nonzero
    /// entry of each column.
    pub fn det(&self) -> FieldElem {
        let n = self.size;
        let mut a = self.entries.clone();
        let mut det = self.ctx.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return self.ctx.zero();
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det = &det * &pivot;
            let pinv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = &a[r * n + col] * &pinv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &a[r * n + j] - &(&factor * &a[col * n + j]);
                    a[r * n + j] = v;
                }
            }
        }
        det
    }

    /// Signed minor `(-1)^(i+j) det M_{ij}`.
    pub fn cofactor(&self, i: usize, j: usize) -> FieldElem {
        let n = self.size;
        let entries = (0..n)
            .filter(|&r| r != i)
            .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| self.entry(r, c).clone())
            .collect();
        let minor = Self { ctx: Arc::clone(&self.ctx), size: n - 1, entries };
        let det = minor.det();
        if (i + j).is_multiple_of(2) {
            det
        } else {
            -det
        }
    }

    pub fn inverse(&self) -> Result<DicksonMatrix> {
        self.inverse_with_det().map(|(inv, _)| inv)
    }

    /// Gauss–Jordan inverse; the determinant falls out as the signed product
    /// of pivots.
    pub fn inverse_with_det(&self) -> Result<(DicksonMatrix, FieldElem)> {
        let n = self.size;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(&self.ctx, n).entries;
        let mut det = self.ctx.one();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::Singular)?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det = &det * &pivot;
            let pinv = pivot.inv()?;
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] * &pinv;
                inv[col * n + j] = &inv[col * n + j] * &pinv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = &a[r * n + j] - &(&factor * &a[col * n + j]);
                    a[r * n + j] = v;
                    let w = &inv[r * n + j] - &(&factor * &inv[col * n + j]);
                    inv[r * n + j] = w;
                }
            }
        }
        Ok((Self { ctx: Arc::clone(&self.ctx), size: n, entries: inv }, det))
    }
}
