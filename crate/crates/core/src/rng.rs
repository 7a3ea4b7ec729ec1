//! Seeded random streams.
//!
//! Every randomised routine draws from a ChaCha8 generator keyed by a 64-bit
//! seed. Independent trials use the same key with a distinct stream id, so
//! trial `i` of seed `s` always sees the generator
//! `ChaCha8Rng::seed_from_u64(s)` with `set_stream(i)`. Streams never overlap,
//! and the output depends only on `(s, i)`, not on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// Generator for the base stream of `seed`.
pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for trial `trial` under `seed`.
pub fn trial_stream(seed: u64, trial: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}
