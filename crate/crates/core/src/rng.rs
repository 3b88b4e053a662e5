//! Deterministic random streams.
//!
//! All randomized operations take an explicit generator; nothing draws from
//! global state. Substreams are split from a master seed by mixing stream
//! indices, so independent computations can run in any order (or in
//! parallel) and still produce identical results for a fixed seed.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// SplitMix64 finalizer, used to decorrelate substream seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic substream `(a, b)` of a master seed.
pub fn substream(seed: u64, a: u64, b: u64) -> ChaCha8Rng {
    let s = mix(seed ^ mix(a.wrapping_add(1)) ^ mix(b.wrapping_mul(0x5851_f42d_4c95_7f2d)));
    ChaCha8Rng::seed_from_u64(s)
}

/// Uniform integer in `[-bound, bound]`, by rejection sampling.
pub fn int_in(rng: &mut ChaCha8Rng, bound: u64) -> i64 {
    let span = 2 * bound + 1;
    let limit = u64::MAX - u64::MAX % span;
    loop {
        let raw = rng.next_u64();
        if raw < limit {
            return (raw % span) as i64 - bound as i64;
        }
    }
}
