//! Linearized binomials `L_r(x) = x^(q^r) + a·x` over `F_{q^n}`.
//!
//! With `d = gcd(n, r)`, `L_r` permutes `F_{q^n}` iff
//! `(-1)^(n/d) · Nor_{n:d}(a) != 1`, and then
//!
//! ```text
//! L_r^{-1}(x) = N / (N + (-1)^(n/d - 1)) · sum_{i < n/d} (-1)^i a^{-(1 + q^r + ... + q^(ir))} x^(q^(ir))
//! ```
//!
//! with `N = Nor_{n:d}(a)`. Exponents `1 + q^r + ... + q^(ir)` are never
//! formed as integers; they are products of Frobenius conjugates.

mod lift;
mod special;

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElem};
use crate::linpoly::LinearizedPoly;
pub use lift::{lift, lift_with};
pub use special::{unit_shift_cofactors, Corollary};

/// The pair `(a, r)` describing `x^(q^r) + a·x`, with `d = gcd(n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialSpec {
    a: FieldElem,
    r: usize,
    d: usize,
}

impl BinomialSpec {
    pub fn new(a: FieldElem, r: usize) -> Result<Self> {
        let n = a.ctx().n();
        if r == 0 || r >= n {
            return Err(Error::InvalidParameter(format!("r = {r} must lie in [1, {}]", n.saturating_sub(1))));
        }
        Ok(Self { a, r, d: n.gcd(&r) })
    }

    pub fn a(&self) -> &FieldElem {
        &self.a
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.ctx().n()
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        self.a.ctx()
    }

    /// `L_r` as a general linearized polynomial.
    pub fn poly(&self) -> LinearizedPoly {
        let ctx = self.ctx();
        let mut coeffs = vec![ctx.zero(); self.n()];
        coeffs[0] = self.a.clone();
        coeffs[self.r] = ctx.one();
        LinearizedPoly::new(ctx, coeffs).expect("n coefficients")
    }

    /// `Nor_{n:d}(a)`.
    pub fn norm(&self) -> FieldElem {
        self.a.norm_rel(self.d).expect("d divides n")
    }

    /// `(-1)^(n/d) · Nor_{n:d}(a)`; the binomial permutes iff this is not 1.
    pub fn criterion_value(&self) -> FieldElem {
        self.ctx().sign(self.n() / self.d) * self.norm()
    }

    /// `Nor_{n:d}(a) + (-1)^(n/d - 1)`, the denominator of the closed form.
    pub fn denominator(&self) -> FieldElem {
        self.norm() + self.ctx().sign(self.n() / self.d - 1)
    }

    pub fn is_permutation(&self) -> bool {
        let by_criterion = !self.criterion_value().is_one();
        let by_denominator = !self.denominator().is_zero();
        assert_eq!(by_criterion, by_denominator, "criterion and denominator disagree");
        by_criterion
    }

    fn violated(&self) -> Error {
        Error::CriterionViolated { value: self.criterion_value().to_string() }
    }

    /// Closed-form compositional inverse.
    pub fn inverse(&self) -> Result<LinearizedPoly> {
        let ctx = self.ctx();
        let n = self.n();
        if self.a.is_zero() {
            return Ok(LinearizedPoly::monomial(ctx, n - self.r, ctx.one()));
        }
        if !self.is_permutation() {
            return Err(self.violated());
        }
        let norm = self.norm();
        let front = &norm * &self.denominator().inv()?;
        let step = ctx.e() * self.r;

        let mut coeffs = vec![ctx.zero(); n];
        // acc_i = a^{-(1 + q^r + ... + q^(ir))}, grown one conjugate at a time
        let a_inv = self.a.inv()?;
        let mut conj = a_inv.clone();
        let mut acc = a_inv;
        for i in 0..n / self.d {
            let term = &front * &acc;
            coeffs[(i * self.r) % n] = if i % 2 == 0 { term } else { -term };
            conj = conj.frobenius(step);
            acc = &acc * &conj;
        }
        LinearizedPoly::new(ctx, coeffs)
    }

    /// Corollary-specific closed form, computed independently of
    /// [`BinomialSpec::inverse`]. Uses the first applicable shape.
    pub fn inverse_special(&self) -> Result<LinearizedPoly> {
        let shape = Corollary::ALL
            .into_iter()
            .find(|c| c.applies(self))
            .ok_or(Error::UnsupportedShape { r: self.r, n: self.n() })?;
        shape.inverse(self)
    }

    /// Corollary shapes matching this spec.
    pub fn corollaries(&self) -> Vec<Corollary> {
        Corollary::ALL.into_iter().filter(|c| c.applies(self)).collect()
    }
}

/// `a^{(q^((i+1)r) - 1)/(q^r - 1)} = prod_{j <= i} a^(q^(jr))`.
pub fn geometric_power(a: &FieldElem, r: usize, i: usize) -> Result<FieldElem> {
    let n = a.ctx().n();
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if r == 0 || r >= n {
        return Err(Error::InvalidParameter(format!("r = {r} must lie in [1, {}]", n - 1)));
    }
    let d = n.gcd(&r);
    if i >= n / d {
        return Err(Error::InvalidParameter(format!("i = {i} must be below n/d = {}", n / d)));
    }
    let step = a.ctx().e() * r;
    let mut conj = a.clone();
    let mut acc = a.clone();
    for _ in 0..i {
        conj = conj.frobenius(step);
        acc = &acc * &conj;
    }
    Ok(acc)
}
