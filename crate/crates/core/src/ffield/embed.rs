//! Canonical embedding of a subfield into a larger field of the same
//! characteristic.
//!
//! The small field's generator is sent to the root of the small modulus in
//! the big field with the smallest encoding. One root is found by
//! equal-degree splitting (Cantor–Zassenhaus for odd `p`, trace splitting
//! for `p = 2`); its Frobenius conjugates are the remaining roots.

use std::sync::Arc;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FieldCtx, FieldElem};
use crate::error::{Error, Result};

/// Field homomorphism from a small field into a big one.
#[derive(Debug, Clone)]
pub struct Embedding {
    small: Arc<FieldCtx>,
    big: Arc<FieldCtx>,
    // powers u^0 .. u^(m_small - 1) of the image of the small generator
    basis_images: Vec<FieldElem>,
}

impl Embedding {
    pub fn new(small: &Arc<FieldCtx>, big: &Arc<FieldCtx>) -> Result<Self> {
        let (ms, mb) = (small.degree(), big.degree());
        if small.p() != big.p() || mb % ms != 0 {
            return Err(Error::InvalidParameter(format!(
                "F_{}^{} does not embed in F_{}^{}",
                small.p(),
                ms,
                big.p(),
                mb
            )));
        }
        let root = if small.same_arithmetic(big) {
            big.adopt(&small.generator())?
        } else {
            min_root(small.modulus(), big)
        };
        let mut basis_images = Vec::with_capacity(ms);
        let mut acc = big.one();
        for _ in 0..ms {
            basis_images.push(acc.clone());
            acc = &acc * &root;
        }
        Ok(Self { small: Arc::clone(small), big: Arc::clone(big), basis_images })
    }

    pub fn small(&self) -> &Arc<FieldCtx> {
        &self.small
    }

    pub fn big(&self) -> &Arc<FieldCtx> {
        &self.big
    }

    /// Image of the small field's generator.
    pub fn generator_image(&self) -> FieldElem {
        if self.basis_images.len() > 1 {
            self.basis_images[1].clone()
        } else {
            // F_p: the generator is the residue of x mod the linear modulus
            let g = self.small.generator().coeffs()[0];
            self.big.constant(g)
        }
    }

    pub fn apply(&self, x: &FieldElem) -> Result<FieldElem> {
        if !x.ctx().same_arithmetic(&self.small) {
            return Err(Error::ContextMismatch);
        }
        let mut acc = self.big.zero();
        for (&c, image) in x.coeffs().iter().zip(&self.basis_images) {
            if c != 0 {
                acc = acc + image.scale(c);
            }
        }
        Ok(acc)
    }
}

/// Root of `modulus` (irreducible over F_p, degree dividing the big degree)
/// in `big` with the smallest encoding.
fn min_root(modulus: &[u64], big: &Arc<FieldCtx>) -> FieldElem {
    let f: Vec<FieldElem> = modulus.iter().map(|&c| big.constant(c)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let root = one_root(big, f, &mut rng);
    let ms = modulus.len() - 1;
    let mut best = root.clone();
    let mut best_enc = best.encode();
    let mut conj = root;
    for _ in 1..ms {
        conj = conj.frobenius(1);
        let enc = conj.encode();
        if enc < best_enc {
            best_enc = enc;
            best = conj.clone();
        }
    }
    best
}

fn one_root(big: &Arc<FieldCtx>, mut f: Vec<FieldElem>, rng: &mut ChaCha8Rng) -> FieldElem {
    loop {
        let d = f.len() - 1;
        if d == 1 {
            // monic linear factor x + c
            return -&f[0];
        }
        let delta = big.random(rng);
        let h = if big.p() == 2 {
            trace_poly(big, &delta, &f)
        } else {
            let exp = (big.order() - 1u32) / 2u32;
            let base = vec![delta, big.one()];
            let mut h = pow_mod(big, &base, &exp, &f);
            if h.is_empty() {
                h.push(big.zero());
            }
            h[0] = &h[0] - &big.one();
            trim(h)
        };
        let g = gcd(&f, &h);
        let dg = g.len() - 1;
        if dg == 0 || dg == d {
            continue;
        }
        let (q, _) = div_rem(&f, &g);
        f = if dg <= d - dg { g } else { monic(q) };
    }
}

/// `sum_{i < m} (delta·x)^(2^i) mod f`, the absolute trace of `delta·x`.
fn trace_poly(big: &Arc<FieldCtx>, delta: &FieldElem, f: &[FieldElem]) -> Vec<FieldElem> {
    let mut y = rem(&[big.zero(), delta.clone()], f);
    let mut acc = y.clone();
    for _ in 1..big.degree() {
        y = rem(&mul(&y, &y), f);
        acc = add(&acc, &y);
    }
    acc
}

fn trim(mut a: Vec<FieldElem>) -> Vec<FieldElem> {
    while a.last().is_some_and(FieldElem::is_zero) {
        a.pop();
    }
    a
}

fn add(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = &*o + s;
    }
    trim(out)
}

fn mul(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let zero = a[0].ctx().zero();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn monic(a: Vec<FieldElem>) -> Vec<FieldElem> {
    let lead = a.last().expect("nonzero polynomial").inv().expect("nonzero lead");
    a.iter().map(|c| c * &lead).collect()
}

fn div_rem(a: &[FieldElem], b: &[FieldElem]) -> (Vec<FieldElem>, Vec<FieldElem>) {
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let zero = b[0].ctx().zero();
    let mut q = vec![zero; r.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let c = &r[i] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] = &r[i - db + j] - &(&c * bj);
        }
        q[i - db] = c;
    }
    (trim(q), trim(r))
}

fn rem(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    div_rem(a, b).1
}

fn gcd(a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    monic(x)
}

fn pow_mod(big: &Arc<FieldCtx>, base: &[FieldElem], exp: &BigUint, f: &[FieldElem]) -> Vec<FieldElem> {
    let base = rem(base, f);
    let mut acc = vec![big.one()];
    for i in (0..exp.bits()).rev() {
        acc = rem(&mul(&acc, &acc), f);
        if exp.bit(i) {
            acc = rem(&mul(&acc, &base), f);
        }
    }
    acc
}
