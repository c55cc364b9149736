//! Exact arithmetic in `F_p` and `F_{p^m}` over a polynomial basis.
//!
//! A [`FieldCtx`] describes the tower `F_p ⊆ F_q ⊆ F_{q^n}` with `q = p^e`
//! and realizes `F_{q^n}` as `F_p[x] / (f)` for a monic irreducible `f` of
//! degree `m = e·n`. The relative Frobenius `x ↦ x^q` is the `e`-fold
//! absolute Frobenius, so every element lives in one flat representation.

mod embed;
pub mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
pub use embed::Embedding;
pub use poly::Zp;

/// Immutable description of `F_{q^n}`, `q = p^e`.
pub struct FieldCtx {
    zp: Zp,
    e: usize,
    n: usize,
    m: usize,
    modulus: Vec<u64>,
    // frob[j] is the F_p-matrix of x -> x^(p^(2^j)); column k (stored
    // contiguously at k*m..) is the image of the basis element x^k.
    frob: Vec<Vec<u64>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p())
            .field("e", &self.e)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Equal contexts share arithmetic and the tower split.
impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.same_arithmetic(other) && self.e == other.e && self.n == other.n
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds `F_{(p^e)^n}` with the encoding-minimal irreducible modulus.
    pub fn new(p: u64, e: usize, n: usize) -> Result<Arc<Self>> {
        let zp = Zp::new(p)?;
        let m = total_degree(e, n)?;
        let modulus = poly::find_irreducible(zp, m)?;
        Ok(Self::build(zp, e, n, modulus))
    }

    /// Builds the field with a caller-supplied modulus (little-endian
    /// coefficients, leading coefficient included).
    pub fn with_modulus(p: u64, e: usize, n: usize, modulus: Vec<u64>) -> Result<Arc<Self>> {
        let zp = Zp::new(p)?;
        let m = total_degree(e, n)?;
        let valid = modulus.len() == m + 1
            && modulus[m] == 1
            && modulus.iter().all(|&c| c < p)
            && poly::is_irreducible(zp, &modulus);
        if !valid {
            return Err(Error::InvalidModulus { p, degree: m });
        }
        Ok(Self::build(zp, e, n, modulus))
    }

    /// The same arithmetic viewed as a different tower `F_{(p^e)^n}` with
    /// `e·n` unchanged.
    pub fn retower(&self, e: usize, n: usize) -> Result<Arc<Self>> {
        if total_degree(e, n)? != self.m {
            return Err(Error::InvalidParameter(format!(
                "tower e={e}, n={n} does not have total degree {}",
                self.m
            )));
        }
        Ok(Arc::new(Self {
            zp: self.zp,
            e,
            n,
            m: self.m,
            modulus: self.modulus.clone(),
            frob: self.frob.clone(),
        }))
    }

    fn build(zp: Zp, e: usize, n: usize, modulus: Vec<u64>) -> Arc<Self> {
        let m = modulus.len() - 1;
        let mut frob = Vec::new();
        if m > 1 {
            let xp = poly::pow_mod(zp, &[0, 1], &BigUint::from(zp.modulus()), &modulus);
            let mut level = vec![0u64; m * m];
            let mut col = vec![1u64];
            for k in 0..m {
                level[k * m..k * m + col.len()].copy_from_slice(&col);
                col = poly::mul_mod(zp, &col, &xp, &modulus);
            }
            let mut span = 1usize;
            loop {
                frob.push(level);
                span *= 2;
                if span >= m {
                    break;
                }
                let prev = frob.last().unwrap();
                let mut next = vec![0u64; m * m];
                for k in 0..m {
                    let image = apply_matrix(zp, prev, m, &prev[k * m..(k + 1) * m]);
                    next[k * m..(k + 1) * m].copy_from_slice(&image);
                }
                level = next;
            }
        }
        Arc::new(Self { zp, e, n, m, modulus, frob })
    }

    pub fn p(&self) -> u64 {
        self.zp.modulus()
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total degree `m = e·n` over `F_p`.
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn zp(&self) -> Zp {
        self.zp
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Encoding of the modulus, leading coefficient included.
    pub fn modulus_encoding(&self) -> BigUint {
        poly::encode(self.zp, &self.modulus)
    }

    /// `p^m`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.m as u32)
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.p().checked_pow(u32::try_from(self.m).ok()?)
    }

    /// Base field size `q = p^e`.
    pub fn q(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.e as u32)
    }

    /// Whether elements of the two contexts share arithmetic (same `p` and
    /// modulus), regardless of the tower split.
    pub fn same_arithmetic(&self, other: &FieldCtx) -> bool {
        std::ptr::eq(self, other) || (self.p() == other.p() && self.modulus == other.modulus)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElem {
        FieldElem { coeffs: vec![0; self.m], ctx: Arc::clone(self) }
    }

    pub fn one(self: &Arc<Self>) -> FieldElem {
        self.constant(1)
    }

    /// Embedding of the prime-field residue `c mod p`.
    pub fn constant(self: &Arc<Self>, c: u64) -> FieldElem {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = c % self.p();
        FieldElem { coeffs, ctx: Arc::clone(self) }
    }

    /// `(-1)^k` as a field element.
    pub fn sign(self: &Arc<Self>, k: usize) -> FieldElem {
        if k.is_multiple_of(2) {
            self.one()
        } else {
            self.constant(self.p() - 1)
        }
    }

    /// The class of `x` modulo the modulus (encoding `p` whenever `m > 1`).
    pub fn generator(self: &Arc<Self>) -> FieldElem {
        let x = poly::rem(self.zp, &[0, 1], &self.modulus).expect("nonzero modulus");
        self.from_poly(&x)
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<u64>) -> Result<FieldElem> {
        if coeffs.len() != self.m || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::InvalidParameter(format!(
                "expected {} coordinates in [0, {})",
                self.m,
                self.p()
            )));
        }
        Ok(FieldElem { coeffs, ctx: Arc::clone(self) })
    }

    fn from_poly(self: &Arc<Self>, reduced: &[u64]) -> FieldElem {
        let mut coeffs = vec![0; self.m];
        coeffs[..reduced.len()].copy_from_slice(reduced);
        FieldElem { coeffs, ctx: Arc::clone(self) }
    }

    pub fn from_encoding(self: &Arc<Self>, value: &BigUint) -> Result<FieldElem> {
        poly::decode(self.zp, value, self.m)
            .map(|coeffs| FieldElem { coeffs, ctx: Arc::clone(self) })
            .ok_or_else(|| Error::EncodingOutOfRange(value.to_string()))
    }

    pub fn from_u64(self: &Arc<Self>, value: u64) -> Result<FieldElem> {
        let p = self.p();
        let mut v = value;
        let mut coeffs = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            coeffs.push(v % p);
            v /= p;
        }
        if v != 0 {
            return Err(Error::EncodingOutOfRange(value.to_string()));
        }
        Ok(FieldElem { coeffs, ctx: Arc::clone(self) })
    }

    /// Rebinds an element of a field with the same arithmetic to this
    /// context's tower view.
    pub fn adopt(self: &Arc<Self>, x: &FieldElem) -> Result<FieldElem> {
        if !self.same_arithmetic(&x.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(FieldElem { coeffs: x.coeffs.clone(), ctx: Arc::clone(self) })
    }

    /// All elements in increasing encoding order. Fails if `p^m` does not
    /// fit in a `u64`.
    pub fn elements(self: &Arc<Self>) -> Result<impl Iterator<Item = FieldElem> + '_> {
        let order = self
            .order_u64()
            .ok_or_else(|| Error::Capacity { order: self.order().to_string(), cap: u64::MAX })?;
        Ok((0..order).map(move |v| self.from_u64(v).expect("in range")))
    }

    pub fn random<R: Rng + ?Sized>(self: &Arc<Self>, rng: &mut R) -> FieldElem {
        let p = self.p();
        let coeffs = (0..self.m).map(|_| rng.gen_range(0..p)).collect();
        FieldElem { coeffs, ctx: Arc::clone(self) }
    }

    fn reduce_product(&self, acc: &mut [u128]) -> Vec<u64> {
        let p = self.p() as u128;
        let m = self.m;
        for i in (m..acc.len()).rev() {
            let c = (acc[i] % p) as u64;
            acc[i] = 0;
            if c == 0 {
                continue;
            }
            let neg = self.zp.neg(c) as u128;
            for (j, &fj) in self.modulus[..m].iter().enumerate() {
                if fj != 0 {
                    acc[i - m + j] += neg * fj as u128;
                }
            }
        }
        acc[..m].iter().map(|&c| (c % p) as u64).collect()
    }

    fn apply_frobenius(&self, coeffs: &[u64], k: usize) -> Vec<u64> {
        if self.m <= 1 {
            return coeffs.to_vec();
        }
        let mut k = k % self.m;
        let mut out = coeffs.to_vec();
        let mut level = 0;
        while k > 0 {
            if k & 1 == 1 {
                out = apply_matrix(self.zp, &self.frob[level], self.m, &out);
            }
            k >>= 1;
            level += 1;
        }
        out
    }
}

fn total_degree(e: usize, n: usize) -> Result<usize> {
    if e == 0 || n == 0 {
        return Err(Error::InvalidParameter("e and n must be positive".into()));
    }
    e.checked_mul(n)
        .filter(|&m| m <= u32::MAX as usize)
        .ok_or_else(|| Error::InvalidParameter("e*n is too large".into()))
}

fn apply_matrix(zp: Zp, mat: &[u64], m: usize, v: &[u64]) -> Vec<u64> {
    let mut acc = vec![0u128; m];
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (a, &entry) in acc.iter_mut().zip(&mat[k * m..(k + 1) * m]) {
            *a += (c * entry) as u128;
        }
    }
    let p = zp.modulus() as u128;
    acc.into_iter().map(|a| (a % p) as u64).collect()
}

/// An element of `F_{p^m}` in polynomial-basis coordinates.
#[derive(Clone)]
pub struct FieldElem {
    coeffs: Vec<u64>,
    ctx: Arc<FieldCtx>,
}

impl FieldElem {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn encode(&self) -> BigUint {
        poly::encode(self.ctx.zp, &self.coeffs)
    }

    pub fn encode_u64(&self) -> Option<u64> {
        self.encode().to_u64()
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.ctx.same_arithmetic(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn with(&self, coeffs: Vec<u64>) -> FieldElem {
        FieldElem { coeffs, ctx: Arc::clone(&self.ctx) }
    }

    pub fn checked_add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        let zp = self.ctx.zp;
        Ok(self.with(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| zp.add(a, b)).collect()))
    }

    pub fn checked_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        let zp = self.ctx.zp;
        Ok(self.with(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| zp.sub(a, b)).collect()))
    }

    pub fn checked_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        let m = self.ctx.m;
        if m == 1 {
            return Ok(self.with(vec![self.ctx.zp.mul(self.coeffs[0], other.coeffs[0])]));
        }
        let mut acc = vec![0u128; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc[i..i + m].iter_mut().zip(&other.coeffs) {
                *slot += (a * b) as u128;
            }
        }
        Ok(self.with(self.ctx.reduce_product(&mut acc)))
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.checked_mul(&other.inv()?)
    }

    /// Scalar multiple by the prime-field residue `c`.
    pub fn scale(&self, c: u64) -> FieldElem {
        let zp = self.ctx.zp;
        let c = c % zp.modulus();
        self.with(self.coeffs.iter().map(|&a| zp.mul(a, c)).collect())
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// the modulus.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let zp = self.ctx.zp;
        let mut r0 = self.ctx.modulus.clone();
        let mut r1 = poly::trim(self.coeffs.clone());
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = poly::div_rem(zp, &r0, &r1)?;
            let s = poly::sub(zp, &s0, &poly::mul(zp, &q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c = zp.inv(r0[0])?;
        let s = poly::rem(zp, &s0, &self.ctx.modulus)?;
        let mut coeffs = vec![0; self.ctx.m];
        for (slot, &v) in coeffs.iter_mut().zip(&s) {
            *slot = zp.mul(v, c);
        }
        Ok(self.with(coeffs))
    }

    pub fn pow(&self, exp: u64) -> FieldElem {
        self.pow_big(&BigUint::from(exp))
    }

    pub fn pow_big(&self, exp: &BigUint) -> FieldElem {
        let mut acc = self.ctx.one();
        for i in (0..exp.bits()).rev() {
            acc = &acc * &acc;
            if exp.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// `x^(p^k)`.
    pub fn frobenius(&self, k: usize) -> FieldElem {
        self.with(self.ctx.apply_frobenius(&self.coeffs, k))
    }

    /// `x^(q^j)` for `q = p^e` of this element's context.
    pub fn frobenius_q(&self, j: usize) -> FieldElem {
        self.frobenius(self.ctx.e * (j % self.ctx.n.max(1)))
    }

    /// Relative norm `Nor_{n:d}(x) = prod_{i < n/d} x^(q^(d·i))`, landing in
    /// `F_{q^d}`.
    pub fn norm_rel(&self, d: usize) -> Result<FieldElem> {
        let n = self.ctx.n;
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::InvalidParameter(format!("d = {d} does not divide n = {n}")));
        }
        let step = self.ctx.e * d;
        let mut conj = self.clone();
        let mut acc = self.clone();
        for _ in 1..n / d {
            conj = conj.frobenius(step);
            acc = &acc * &conj;
        }
        Ok(acc)
    }

    /// Whether `x` is fixed by `y ↦ y^(p^k)`, i.e. lies in `F_{p^k}`.
    pub fn is_fixed_by(&self, k: usize) -> bool {
        self.frobenius(k) == *self
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.ctx.same_arithmetic(&other.ctx)
    }
}

impl Eq for FieldElem {}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({} in F_{}^{})", self.encode(), self.ctx.p(), self.ctx.m)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            /// Panics if the operands belong to different fields.
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field context mismatch")
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let zp = self.ctx.zp;
        self.with(self.coeffs.iter().map(|&a| zp.neg(a)).collect())
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

/// Monic irreducible of degree `m` over `F_p` with the smallest encoding.
pub fn find_irreducible(p: u64, m: usize) -> Result<Vec<u64>> {
    poly::find_irreducible(Zp::new(p)?, m)
}

/// Image of `x` under the canonical embedding into `big`.
pub fn embed_subfield(x: &FieldElem, big: &Arc<FieldCtx>) -> Result<FieldElem> {
    Embedding::new(x.ctx(), big)?.apply(x)
}
