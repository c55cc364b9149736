//! Dense polynomials over a prime field `F_p`.
//!
//! Polynomials are little-endian coefficient vectors with trailing zeros
//! trimmed; the zero polynomial is the empty vector.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Largest prime accepted anywhere in the crate. Keeps every product of two
/// residues inside a `u64`.
pub const MAX_PRIME: u64 = 1 << 32;

/// Polynomials of degree up to this bound are tested for irreducibility by
/// trial division, provided the divisor count stays small.
pub const TRIAL_DIVISION_MAX_DEGREE: usize = 8;

const TRIAL_DIVISION_MAX_CANDIDATES: u64 = 1 << 16;

/// Arithmetic in `Z/pZ` on machine words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }
}

/// Deterministic trial-division primality test; fine for `p < 2^32`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(zp: Zp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out =
        (0..len).map(|i| zp.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0))).collect();
    trim(out)
}

pub fn sub(zp: Zp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out =
        (0..len).map(|i| zp.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0))).collect();
    trim(out)
}

pub fn mul(zp: Zp, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += (x * y) as u128;
        }
    }
    let p = zp.modulus() as u128;
    trim(acc.into_iter().map(|c| (c % p) as u64).collect())
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub fn div_rem(zp: Zp, a: &[u64], b: &[u64]) -> Result<(Vec<u64>, Vec<u64>)> {
    let db = degree(b).ok_or(Error::DivisionByZero)?;
    let lead_inv = zp.inv(b[db])?;
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return Ok((Vec::new(), Vec::new()));
    };
    if da < db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![0u64; da - db + 1];
    for i in (db..=da).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        let f = zp.mul(c, lead_inv);
        q[i - db] = f;
        for (j, &bj) in b[..=db].iter().enumerate() {
            r[i - db + j] = zp.sub(r[i - db + j], zp.mul(f, bj));
        }
    }
    Ok((trim(q), trim(r)))
}

pub fn rem(zp: Zp, a: &[u64], b: &[u64]) -> Result<Vec<u64>> {
    div_rem(zp, a, b).map(|(_, r)| r)
}

pub fn make_monic(zp: Zp, a: &[u64]) -> Vec<u64> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = zp.inv(a[d]).expect("nonzero leading coefficient");
            trim(a[..=d].iter().map(|&c| zp.mul(c, inv)).collect())
        }
    }
}

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd(zp: Zp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(zp, &x, &y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    make_monic(zp, &x)
}

pub fn mul_mod(zp: Zp, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    rem(zp, &mul(zp, a, b), f).expect("nonzero modulus")
}

/// `base^exp mod f`, with the exponent given as a big integer.
pub fn pow_mod(zp: Zp, base: &[u64], exp: &BigUint, f: &[u64]) -> Vec<u64> {
    let mut acc = rem(zp, &[1], f).expect("nonzero modulus");
    if exp.is_zero() {
        return acc;
    }
    let base = rem(zp, base, f).expect("nonzero modulus");
    for i in (0..exp.bits()).rev() {
        acc = mul_mod(zp, &acc, &acc, f);
        if exp.bit(i) {
            acc = mul_mod(zp, &acc, &base, f);
        }
    }
    acc
}

/// `x^(p^j) mod f` obtained by `j` successive p-th powers of `x`.
pub fn frobenius_x(zp: Zp, j: usize, f: &[u64]) -> Vec<u64> {
    let p = BigUint::from(zp.modulus());
    let mut acc = rem(zp, &[0, 1], f).expect("nonzero modulus");
    for _ in 0..j {
        acc = pow_mod(zp, &acc, &p, f);
    }
    acc
}

/// Integer encoding `sum c_i p^i`.
pub fn encode(zp: Zp, a: &[u64]) -> BigUint {
    let p = BigUint::from(zp.modulus());
    a.iter().rev().fold(BigUint::zero(), |acc, &c| acc * &p + BigUint::from(c))
}

/// Inverse of [`encode`] producing exactly `len` coordinates, or `None` if
/// the value does not fit.
pub fn decode(zp: Zp, value: &BigUint, len: usize) -> Option<Vec<u64>> {
    let p = BigUint::from(zp.modulus());
    let mut v = value.clone();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let digit = &v % &p;
        out.push(digit.iter_u64_digits().next().unwrap_or(0));
        v /= &p;
    }
    v.is_zero().then_some(out)
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most `deg(f) / 2`.
pub fn is_irreducible_trial(zp: Zp, f: &[u64]) -> bool {
    let Some(m) = degree(f) else { return false };
    if m == 0 {
        return false;
    }
    let p = zp.modulus();
    for k in 1..=m / 2 {
        let mut low = vec![0u64; k];
        loop {
            let mut g = low.clone();
            g.push(1);
            if rem(zp, f, &g).expect("monic divisor").is_empty() {
                return false;
            }
            // next coefficient vector in base p, little-endian
            let mut i = 0;
            while i < k {
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    true
}

/// Ben-Or irreducibility test: `f` of degree `m` is irreducible iff
/// `gcd(f, x^(p^j) - x) = 1` for `1 <= j <= m/2`.
pub fn is_irreducible_gcd(zp: Zp, f: &[u64]) -> bool {
    let Some(m) = degree(f) else { return false };
    if m == 0 {
        return false;
    }
    let p = BigUint::from(zp.modulus());
    let x = rem(zp, &[0, 1], f).expect("nonzero modulus");
    let mut xp = x.clone();
    for _ in 1..=m / 2 {
        xp = pow_mod(zp, &xp, &p, f);
        let g = gcd(zp, f, &sub(zp, &xp, &x));
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn trial_candidates(p: u64, m: usize) -> Option<u64> {
    (1..=m / 2).try_fold(0u64, |acc, k| p.checked_pow(k as u32).and_then(|c| acc.checked_add(c)))
}

pub fn is_irreducible(zp: Zp, f: &[u64]) -> bool {
    let Some(m) = degree(f) else { return false };
    let cheap = trial_candidates(zp.modulus(), m).is_some_and(|c| c <= TRIAL_DIVISION_MAX_CANDIDATES);
    if m <= TRIAL_DIVISION_MAX_DEGREE && cheap {
        is_irreducible_trial(zp, f)
    } else {
        is_irreducible_gcd(zp, f)
    }
}

/// Whether some `x^m - c` is irreducible over `F_p`: every prime factor of
/// `m` must divide `p - 1`, and `p = 1 mod 4` when `4 | m`.
fn binomials_can_be_irreducible(p: u64, m: usize) -> bool {
    let m = m as u64;
    if m.is_multiple_of(4) && p % 4 != 1 {
        return false;
    }
    let mut rest = m;
    let mut l = 2;
    while l * l <= rest {
        if rest.is_multiple_of(l) {
            if !(p - 1).is_multiple_of(l) {
                return false;
            }
            while rest.is_multiple_of(l) {
                rest /= l;
            }
        }
        l += 1;
    }
    rest == 1 || (p - 1).is_multiple_of(rest)
}

/// The monic irreducible of degree `m` with the smallest encoding.
pub fn find_irreducible(zp: Zp, m: usize) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    if m == 1 {
        return Ok(vec![0, 1]);
    }
    let p = zp.modulus();
    let mut f = vec![0u64; m + 1];
    f[m] = 1;
    if !binomials_can_be_irreducible(p, m) {
        f[1] = 1;
    }
    loop {
        if is_irreducible(zp, &f) {
            return Ok(f);
        }
        let mut i = 0;
        while i < m {
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        // an irreducible of every degree exists, so the search never wraps
        assert!(i < m, "exhausted monic polynomials of degree {m}");
    }
}
