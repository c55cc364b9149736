//! Linearized polynomials `L(x) = sum_{i<n} a_i x^(q^i)` over `F_{q^n}`.
//!
//! Every polynomial is kept reduced modulo `x^(q^n) - x`, so it has exactly
//! `n` coefficient slots and equality is coefficientwise.

mod dickson;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElem};
pub use dickson::DicksonMatrix;

#[derive(Clone, PartialEq, Eq)]
pub struct LinearizedPoly {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<FieldElem>,
}

/// Cofactors `ã_i` of the first column of a Dickson matrix together with
/// its determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cofactors {
    pub values: Vec<FieldElem>,
    pub det: FieldElem,
}

impl LinearizedPoly {
    /// Takes exactly `n` coefficients `a_0, ..., a_{n-1}`; other lengths are
    /// rejected rather than padded.
    pub fn new(ctx: &Arc<FieldCtx>, coeffs: Vec<FieldElem>) -> Result<Self> {
        if coeffs.len() != ctx.n() {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                ctx.n(),
                coeffs.len()
            )));
        }
        let coeffs = coeffs.iter().map(|c| ctx.adopt(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self { ctx: Arc::clone(ctx), coeffs })
    }

    pub fn from_encodings(ctx: &Arc<FieldCtx>, encodings: &[u64]) -> Result<Self> {
        let coeffs = encodings.iter().map(|&v| ctx.from_u64(v)).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, coeffs)
    }

    /// Parses the comma-separated integer encodings `a_0,a_1,...,a_{n-1}`.
    pub fn parse(ctx: &Arc<FieldCtx>, text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|tok| {
                let v: BigUint = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad coefficient {tok:?}")))?;
                ctx.from_encoding(&v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, coeffs)
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        Self { ctx: Arc::clone(ctx), coeffs: vec![ctx.zero(); ctx.n()] }
    }

    pub fn identity(ctx: &Arc<FieldCtx>) -> Self {
        Self::monomial(ctx, 0, ctx.one())
    }

    /// `c · x^(q^k)`, with `k` reduced modulo `n`.
    pub fn monomial(ctx: &Arc<FieldCtx>, k: usize, c: FieldElem) -> Self {
        let mut out = Self::zero(ctx);
        out.coeffs[k % ctx.n()] = ctx.adopt(&c).expect("coefficient from a foreign field");
        out
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &FieldElem {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(FieldElem::is_zero)
    }

    pub fn encodings(&self) -> Vec<BigUint> {
        self.coeffs.iter().map(FieldElem::encode).collect()
    }

    /// `sum a_i · x^(q^i)`.
    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem> {
        if !self.ctx.same_arithmetic(x.ctx()) {
            return Err(Error::ContextMismatch);
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &FieldElem) -> FieldElem {
        let e = self.ctx.e();
        let mut acc = self.ctx.zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc = acc + a * &x.frobenius(e * i);
            }
        }
        acc
    }

    /// `A(B(x)) mod (x^(q^n) - x)`: `c_k = sum_{i+j ≡ k} a_i · b_j^(q^i)`.
    pub fn compose(&self, other: &LinearizedPoly) -> Result<LinearizedPoly> {
        if !self.ctx.same_arithmetic(&other.ctx) || self.ctx.n() != other.ctx.n() {
            return Err(Error::ContextMismatch);
        }
        let n = self.ctx.n();
        let mut out = vec![self.ctx.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                out[k] = &out[k] + &(a * &b.frobenius_q(i));
            }
        }
        Ok(Self { ctx: Arc::clone(&self.ctx), coeffs: out })
    }

    /// Associate Dickson matrix, `entry(i, j) = a_{(j - i) mod n}^(q^i)`.
    pub fn dickson_matrix(&self) -> DicksonMatrix {
        DicksonMatrix::of(self)
    }

    /// Dickson's criterion: `L` permutes `F_{q^n}` iff `det D_L != 0`.
    pub fn is_permutation_dickson(&self) -> bool {
        !self.dickson_matrix().det().is_zero()
    }

    /// Cofactors `ã_i` of the entries `(i, 0)` of `D_L`, read off the first
    /// row of `D_L^{-1}` scaled by `det D_L`. A singular matrix has no
    /// inverse, so its cofactors come from the individual minors instead.
    pub fn cofactors(&self) -> Cofactors {
        let dm = self.dickson_matrix();
        match dm.inverse_with_det() {
            Ok((inverse, det)) => {
                let values = inverse.row(0).iter().map(|c| c * &det).collect();
                Cofactors { values, det }
            }
            Err(_) => {
                let values = (0..dm.size()).map(|i| dm.cofactor(i, 0)).collect();
                Cofactors { values, det: self.ctx.zero() }
            }
        }
    }

    /// Compositional inverse from `D_{L^{-1}} = D_L^{-1}`: the first row of
    /// the inverse Dickson matrix holds the coefficients of `L^{-1}`.
    pub fn inverse_dickson(&self) -> Result<LinearizedPoly> {
        let dm = self.dickson_matrix();
        let (inverse, det) = dm.inverse_with_det()?;
        let n = self.ctx.n();

        // det L = sum_i a_{n-i}^(q^i) ã_i must reproduce the elimination
        // determinant and lie in F_q.
        let mut expansion = self.ctx.zero();
        for i in 0..n {
            let cofactor = inverse.entry(0, i) * &det;
            expansion = expansion + dm.entry(i, 0) * &cofactor;
        }
        assert_eq!(expansion, det, "first-column expansion disagrees with elimination");
        assert!(det.is_fixed_by(self.ctx.e()), "det D_L is not in F_q");

        let coeffs = inverse.row(0).to_vec();
        Ok(Self { ctx: Arc::clone(&self.ctx), coeffs })
    }
}

impl fmt::Display for LinearizedPoly {
    /// Comma-separated coefficient encodings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearizedPoly[{self}]")
    }
}
