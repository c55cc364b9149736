//! Deterministic inputs shared by the benchmarks.

use std::sync::Arc;

use linperm::timing::sample_permutation;
use linperm::{BinomialSpec, FieldCtx, FieldElem, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

/// `count` permutation binomials of shape `r` over `ctx`, drawn from a fixed
/// seed.
pub fn permutation_specs(ctx: &Arc<FieldCtx>, r: usize, count: usize) -> Result<Vec<BinomialSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count).map(|_| sample_permutation(ctx, r, &mut rng)).collect()
}

/// `count` uniformly random nonzero elements of `ctx`.
pub fn nonzero_elements(ctx: &Arc<FieldCtx>, count: usize) -> Vec<FieldElem> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    std::iter::repeat_with(|| ctx.random(&mut rng)).filter(|x| !x.is_zero()).take(count).collect()
}
