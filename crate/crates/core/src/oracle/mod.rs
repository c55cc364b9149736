//! Brute-force ground truth over small fields.
//!
//! Everything here evaluates polynomials at every field element, so it is
//! bounded by a capacity on the field order.

mod sweep;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElem};
use crate::linpoly::LinearizedPoly;
pub use sweep::{sweep, Check, Failure, ShapeStats, SweepConfig, SweepReport};

/// Hard upper bound on the order of any field checked exhaustively.
pub const CAPACITY_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    max_field_order: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { max_field_order: CAPACITY_CAP }
    }
}

/// `T[enc(L(x))] = x` for a permutation `L`.
#[derive(Debug, Clone)]
pub struct InverseTable {
    ctx: Arc<FieldCtx>,
    preimages: Vec<FieldElem>,
}

impl InverseTable {
    /// Preimage of `y`.
    pub fn get(&self, y: &FieldElem) -> Result<&FieldElem> {
        if !self.ctx.same_arithmetic(y.ctx()) {
            return Err(Error::ContextMismatch);
        }
        Ok(&self.preimages[index(y)])
    }

    pub fn len(&self) -> usize {
        self.preimages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preimages.is_empty()
    }
}

/// Encoding as a table index; callers guarantee the order fits a `usize`.
fn index(x: &FieldElem) -> usize {
    let p = x.ctx().p() as usize;
    x.coeffs().iter().rev().fold(0usize, |acc, &c| acc * p + c as usize)
}

impl Oracle {
    pub fn new(max_field_order: u64) -> Result<Self> {
        if max_field_order == 0 || max_field_order > CAPACITY_CAP {
            return Err(Error::InvalidParameter(format!("capacity must lie in [1, {CAPACITY_CAP}]")));
        }
        Ok(Self { max_field_order })
    }

    pub fn max_field_order(&self) -> u64 {
        self.max_field_order
    }

    fn order(&self, ctx: &FieldCtx) -> Result<u64> {
        match ctx.order_u64() {
            Some(order) if order <= self.max_field_order => Ok(order),
            _ => Err(Error::Capacity { order: ctx.order().to_string(), cap: self.max_field_order }),
        }
    }

    fn images(&self, poly: &LinearizedPoly) -> Result<Vec<FieldElem>> {
        let ctx = poly.ctx();
        self.order(ctx)?;
        Ok(ctx.elements()?.map(|x| poly.eval_unchecked(&x)).collect())
    }

    /// Exhaustive bijectivity: the image set has full size, and (by
    /// linearity, equivalently) only 0 maps to 0.
    pub fn brute_is_permutation(&self, poly: &LinearizedPoly) -> Result<bool> {
        let images = self.images(poly)?;
        let mut seen = vec![false; images.len()];
        let mut distinct = 0usize;
        let mut kernel = 0usize;
        for y in &images {
            let i = index(y);
            if !seen[i] {
                seen[i] = true;
                distinct += 1;
            }
            if i == 0 {
                kernel += 1;
            }
        }
        let bijective = distinct == images.len();
        let trivial_kernel = kernel == 1;
        assert_eq!(bijective, trivial_kernel, "image size and kernel disagree");
        Ok(bijective)
    }

    /// `L(M(x)) = x = M(L(x))` for every `x`.
    pub fn verify_inverse(&self, l: &LinearizedPoly, m: &LinearizedPoly) -> Result<bool> {
        let ctx = l.ctx();
        if !ctx.same_arithmetic(m.ctx()) || ctx.n() != m.ctx().n() {
            return Err(Error::ContextMismatch);
        }
        self.order(ctx)?;
        Ok(ctx.elements()?.all(|x| {
            l.eval_unchecked(&m.eval_unchecked(&x)) == x && m.eval_unchecked(&l.eval_unchecked(&x)) == x
        }))
    }

    pub fn brute_inverse_table(&self, poly: &LinearizedPoly) -> Result<InverseTable> {
        let ctx = poly.ctx();
        let images = self.images(poly)?;
        let mut preimages: Vec<Option<FieldElem>> = vec![None; images.len()];
        for (x, y) in ctx.elements()?.zip(&images) {
            let slot = &mut preimages[index(y)];
            if slot.is_some() {
                return Err(Error::NotPermutation);
            }
            *slot = Some(x);
        }
        let preimages = preimages.into_iter().map(|x| x.expect("bijection")).collect();
        Ok(InverseTable { ctx: Arc::clone(ctx), preimages })
    }

    /// Whether `candidate` agrees with the brute-force inverse table of
    /// `poly` at every point.
    pub fn matches_table(&self, poly: &LinearizedPoly, candidate: &LinearizedPoly) -> Result<bool> {
        let table = self.brute_inverse_table(poly)?;
        let ctx = poly.ctx();
        Ok(ctx.elements()?.all(|y| candidate.eval_unchecked(&y) == table.preimages[index(&y)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Arc<FieldCtx> {
        FieldCtx::new(3, 1, 2).unwrap()
    }

    fn lp(ctx: &Arc<FieldCtx>, enc: &[u64]) -> LinearizedPoly {
        LinearizedPoly::from_encodings(ctx, enc).unwrap()
    }

    #[test]
    fn brute_permutation_examples() {
        let k = f9();
        let o = Oracle::default();
        assert!(o.brute_is_permutation(&LinearizedPoly::identity(&k)).unwrap());
        assert!(!o.brute_is_permutation(&lp(&k, &[3, 1])).unwrap());
        assert!(o.brute_is_permutation(&lp(&k, &[4, 1])).unwrap());
        assert!(!o.brute_is_permutation(&LinearizedPoly::zero(&k)).unwrap());
    }

    #[test]
    fn verify_inverse_examples() {
        let k = f9();
        let o = Oracle::default();
        let id = LinearizedPoly::identity(&k);
        assert!(o.verify_inverse(&id, &id).unwrap());
        assert!(o.verify_inverse(&lp(&k, &[4, 1]), &lp(&k, &[7, 2])).unwrap());
        assert!(!o.verify_inverse(&lp(&k, &[4, 1]), &id).unwrap());
    }

    #[test]
    fn inverse_table_examples() {
        let k = f9();
        let o = Oracle::default();
        let id = o.brute_inverse_table(&LinearizedPoly::identity(&k)).unwrap();
        for x in k.elements().unwrap() {
            assert_eq!(id.get(&x).unwrap(), &x);
        }
        let c = k.from_u64(5).unwrap();
        let t = o.brute_inverse_table(&LinearizedPoly::monomial(&k, 0, c.clone())).unwrap();
        for y in k.elements().unwrap() {
            assert_eq!(t.get(&y).unwrap(), &(&c.inv().unwrap() * &y));
        }
        let l = lp(&k, &[4, 1]);
        let m = lp(&k, &[7, 2]);
        let t = o.brute_inverse_table(&l).unwrap();
        assert_eq!(t.len(), 9);
        for y in k.elements().unwrap() {
            assert_eq!(t.get(&y).unwrap(), &m.eval(&y).unwrap());
        }
        assert!(o.matches_table(&l, &m).unwrap());
        assert!(matches!(o.brute_inverse_table(&lp(&k, &[3, 1])), Err(Error::NotPermutation)));
    }

    #[test]
    fn capacity_is_enforced() {
        let o = Oracle::new(100).unwrap();
        let big = FieldCtx::new(2, 1, 7).unwrap();
        assert!(matches!(
            o.brute_is_permutation(&LinearizedPoly::identity(&big)),
            Err(Error::Capacity { cap: 100, .. })
        ));
        assert!(Oracle::new(CAPACITY_CAP + 1).is_err());
        assert!(Oracle::new(0).is_err());
    }
}
