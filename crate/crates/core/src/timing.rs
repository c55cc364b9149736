//! Wall-clock comparison of the closed-form inverse against the Dickson
//! cofactor inverse on identical random permutation binomials.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::binomial::BinomialSpec;
use crate::error::{Error, Result};
use crate::ffield::FieldCtx;

/// Rejection-sampling budget per trial.
pub const MAX_SAMPLING_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionTiming {
    pub trials: usize,
    pub closed: Vec<Duration>,
    pub dickson: Vec<Duration>,
    /// Whether both routes returned identical coefficients on every trial.
    pub agree: bool,
}

impl InversionTiming {
    fn mean(samples: &[Duration]) -> u128 {
        if samples.is_empty() {
            return 0;
        }
        samples.iter().map(Duration::as_nanos).sum::<u128>() / samples.len() as u128
    }

    pub fn closed_mean_ns(&self) -> u128 {
        Self::mean(&self.closed)
    }

    pub fn dickson_mean_ns(&self) -> u128 {
        Self::mean(&self.dickson)
    }
}

/// Draws `a` uniformly among the elements for which `x^(q^r) + a·x`
/// permutes the field.
pub fn sample_permutation<R: Rng + ?Sized>(
    ctx: &Arc<FieldCtx>,
    r: usize,
    rng: &mut R,
) -> Result<BinomialSpec> {
    for _ in 0..MAX_SAMPLING_ATTEMPTS {
        let spec = BinomialSpec::new(ctx.random(rng), r)?;
        if spec.is_permutation() {
            return Ok(spec);
        }
    }
    Err(Error::Sampling { attempts: MAX_SAMPLING_ATTEMPTS })
}

pub fn compare_inversion<R: Rng + ?Sized>(
    ctx: &Arc<FieldCtx>,
    r: usize,
    trials: usize,
    rng: &mut R,
) -> Result<InversionTiming> {
    let mut out = InversionTiming {
        trials,
        closed: Vec::with_capacity(trials),
        dickson: Vec::with_capacity(trials),
        agree: true,
    };
    for _ in 0..trials {
        let spec = sample_permutation(ctx, r, rng)?;
        let poly = spec.poly();

        let start = Instant::now();
        let closed = spec.inverse()?;
        out.closed.push(start.elapsed());

        let start = Instant::now();
        let dickson = poly.inverse_dickson()?;
        out.dickson.push(start.elapsed());

        out.agree &= closed == dickson;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_runs_agree() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = compare_inversion(&ctx, 1, 2, &mut rng).unwrap();
        assert_eq!(t.closed.len(), 2);
        assert!(t.agree);
    }

    #[test]
    fn zero_trials() {
        let ctx = FieldCtx::new(3, 1, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = compare_inversion(&ctx, 1, 0, &mut rng).unwrap();
        assert_eq!((t.closed_mean_ns(), t.dickson_mean_ns()), (0, 0));
        assert!(t.agree);
    }

    #[test]
    fn sampling_fails_when_only_zero_permutes() {
        // q = 2, gcd(r, n) = 1: Nor(a) = 1 for every a != 0
        let ctx = FieldCtx::new(2, 1, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(
            compare_inversion(&ctx, 1, 1, &mut rng),
            Err(Error::Sampling { attempts: MAX_SAMPLING_ATTEMPTS })
        );
    }
}
