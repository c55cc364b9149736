//! Specialized inverses for `r = 1`, `gcd(r, n) = 1` and `r = n/2`.
//!
//! These deliberately share no code with [`BinomialSpec::inverse`]: the
//! `r = 1` case is assembled from the explicit cofactors of the
//! two-diagonal Dickson matrix, the coprime case reruns it with `q`
//! replaced by `q^r`, and `r = n/2` uses its two-term expression.

use num_integer::Integer;

use super::BinomialSpec;
use crate::error::{Error, Result};
use crate::ffield::FieldElem;
use crate::linpoly::{Cofactors, LinearizedPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corollary {
    /// `r = 1`.
    UnitShift,
    /// `gcd(r, n) = 1`.
    Coprime,
    /// `n` even, `r = n/2`.
    HalfDegree,
}

impl Corollary {
    pub const ALL: [Corollary; 3] = [Corollary::UnitShift, Corollary::Coprime, Corollary::HalfDegree];

    pub fn applies(self, spec: &BinomialSpec) -> bool {
        let (n, r) = (spec.n(), spec.r());
        match self {
            Corollary::UnitShift => r == 1,
            Corollary::Coprime => n.gcd(&r) == 1,
            Corollary::HalfDegree => n % 2 == 0 && 2 * r == n,
        }
    }

    pub fn inverse(self, spec: &BinomialSpec) -> Result<LinearizedPoly> {
        if !self.applies(spec) {
            return Err(Error::UnsupportedShape { r: spec.r(), n: spec.n() });
        }
        match self {
            Corollary::UnitShift => shifted_inverse(spec, 1),
            Corollary::Coprime => shifted_inverse(spec, spec.r()),
            Corollary::HalfDegree => half_degree_inverse(spec),
        }
    }
}

/// Closed-form cofactors of the first column of `D_{L_1}` for `a != 0`:
/// `ã_i = (-1)^i Nor(a) / a^(1 + q + ... + q^i)` for `i < n - 1`,
/// `ã_{n-1} = (-1)^(n-1)`, and `det = a·ã_0 + ã_{n-1}`.
pub fn unit_shift_cofactors(a: &FieldElem) -> Result<Cofactors> {
    shifted_cofactors(a, 1)
}

// Same as above with q replaced by q^step, valid when gcd(step, n) = 1.
fn shifted_cofactors(a: &FieldElem, step: usize) -> Result<Cofactors> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ctx = a.ctx();
    let n = ctx.n();
    let shift = ctx.e() * step;
    // partial[i] = a^(1 + Q + ... + Q^i), Q = q^step, via partial[i] = a · partial[i-1]^Q
    let mut partial = Vec::with_capacity(n);
    partial.push(a.clone());
    for i in 1..n {
        let next = a * &partial[i - 1].frobenius(shift);
        partial.push(next);
    }
    let norm = partial[n - 1].clone();
    let mut values = Vec::with_capacity(n);
    for (i, g) in partial[..n - 1].iter().enumerate() {
        values.push(ctx.sign(i) * &norm * g.inv()?);
    }
    values.push(ctx.sign(n - 1));
    let det = a * &values[0] + &values[n - 1];
    Ok(Cofactors { values, det })
}

fn shifted_inverse(spec: &BinomialSpec, step: usize) -> Result<LinearizedPoly> {
    let ctx = spec.ctx();
    let n = spec.n();
    let a = spec.a();
    if a.is_zero() {
        return Ok(LinearizedPoly::monomial(ctx, n - spec.r(), ctx.one()));
    }
    let Cofactors { values, det } = shifted_cofactors(a, step)?;
    if det.is_zero() {
        // det = Nor(a) + (-1)^(n-1) vanishes exactly when (-1)^n Nor(a) = 1
        let norm = a * &values[0];
        let value = ctx.sign(n) * norm;
        return Err(Error::CriterionViolated { value: value.to_string() });
    }
    let det_inv = det.inv()?;
    let mut coeffs = vec![ctx.zero(); n];
    for (i, cofactor) in values.iter().enumerate() {
        coeffs[(i * step) % n] = cofactor * &det_inv;
    }
    LinearizedPoly::new(ctx, coeffs)
}

fn half_degree_inverse(spec: &BinomialSpec) -> Result<LinearizedPoly> {
    let ctx = spec.ctx();
    let half = spec.n() / 2;
    let a = spec.a();
    let a_conj = a.frobenius_q(half);
    let norm = &a_conj * a;
    if norm.is_one() {
        return Err(Error::CriterionViolated { value: norm.to_string() });
    }
    let scale = (norm - ctx.one()).inv()?;
    let mut coeffs = vec![ctx.zero(); spec.n()];
    coeffs[0] = &a_conj * &scale;
    coeffs[half] = -scale;
    LinearizedPoly::new(ctx, coeffs)
}
