//! Transplanting a linearized polynomial over `F_{q^n}` to `F_{q̄^n}`,
//! `q̄ = q^t`, `gcd(t, n) = 1`: slot `i` receives `a_{t·i mod n}`.

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ffield::{Embedding, FieldCtx};
use crate::linpoly::LinearizedPoly;

/// `L̄(x) = sum_i a_{ti mod n} x^(q̄^i)` over `big = F_{(q^t)^n}`, with the
/// coefficients carried over by the canonical subfield embedding.
pub fn lift(poly: &LinearizedPoly, t: usize, big: &Arc<FieldCtx>) -> Result<LinearizedPoly> {
    let embedding = Embedding::new(poly.ctx(), big)?;
    lift_with(poly, t, &embedding)
}

/// [`lift`] with a prebuilt embedding, for callers lifting many
/// polynomials over the same pair of fields.
pub fn lift_with(poly: &LinearizedPoly, t: usize, embedding: &Embedding) -> Result<LinearizedPoly> {
    let small = poly.ctx();
    let big = embedding.big();
    let n = small.n();
    if t == 0 || t.gcd(&n) != 1 {
        return Err(Error::InvalidParameter(format!("t = {t} must be coprime to n = {n}")));
    }
    if !embedding.small().same_arithmetic(small)
        || big.p() != small.p()
        || big.n() != n
        || big.e() != small.e() * t
    {
        return Err(Error::InvalidParameter(format!("big field must be F_(q^{t})^{n} over the same prime")));
    }
    let coeffs = (0..n).map(|i| embedding.apply(poly.coeff((t * i) % n))).collect::<Result<Vec<_>>>()?;
    LinearizedPoly::new(big, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::BinomialSpec;

    #[test]
    fn identity_lift_is_embedding() {
        let small = FieldCtx::new(3, 1, 2).unwrap();
        let big = FieldCtx::new(3, 1, 2).unwrap();
        let l = LinearizedPoly::from_encodings(&small, &[4, 1]).unwrap();
        assert_eq!(lift(&l, 1, &big).unwrap(), l);
        let zero = LinearizedPoly::zero(&small);
        assert!(lift(&zero, 1, &big).unwrap().is_zero());
    }

    #[test]
    fn f9_to_f729() {
        let small = FieldCtx::new(3, 1, 2).unwrap();
        let big = FieldCtx::new(3, 3, 2).unwrap();
        let emb = Embedding::new(&small, &big).unwrap();
        let s = BinomialSpec::new(small.from_u64(4).unwrap(), 1).unwrap();
        let lifted = lift_with(&s.poly(), 3, &emb).unwrap();
        assert_eq!(lifted.coeff(0), &emb.apply(s.a()).unwrap());
        assert!(lifted.coeff(1).is_one());
        assert!(lift(&LinearizedPoly::zero(&small), 3, &big).unwrap().is_zero());
    }

    #[test]
    fn subscripts_are_permuted() {
        let small = FieldCtx::new(2, 1, 3).unwrap();
        let big = FieldCtx::new(2, 2, 3).unwrap();
        let l = LinearizedPoly::from_encodings(&small, &[1, 2, 3]).unwrap();
        let lifted = lift(&l, 2, &big).unwrap();
        let emb = Embedding::new(&small, &big).unwrap();
        // slot i takes a_{2i mod 3}: a_0, a_2, a_1
        for (slot, src) in [(0, 0), (1, 2), (2, 1)] {
            assert_eq!(lifted.coeff(slot), &emb.apply(l.coeff(src)).unwrap());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let small = FieldCtx::new(2, 1, 4).unwrap();
        let l = LinearizedPoly::identity(&small);
        let big = FieldCtx::new(2, 2, 4).unwrap();
        assert!(matches!(lift(&l, 2, &big), Err(Error::InvalidParameter(_))));
        let big = FieldCtx::new(2, 1, 12).unwrap();
        assert!(matches!(lift(&l, 3, &big), Err(Error::InvalidParameter(_))));
        assert!(matches!(lift(&l, 0, &small), Err(Error::InvalidParameter(_))));
    }
}
