//! Deterministic, counter-based random streams.
//!
//! Every stochastic routine in this crate draws from a `ChaCha8Rng` derived
//! from a master seed, a purpose tag, and an index path. Streams with
//! different tags or indices are statistically independent, and results are
//! reproducible for a fixed master seed regardless of evaluation order or
//! worker count.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Derive a 64-bit seed from a master seed, a tag, and an index path.
pub fn derive_seed(master: u64, tag: &str, indices: &[u64]) -> u64 {
    let mut h = FNV_OFFSET;
    for b in tag.as_bytes() {
        h = (h ^ u64::from(*b)).wrapping_mul(FNV_PRIME);
    }
    let mut acc = splitmix(master ^ h);
    for &ix in indices {
        acc = splitmix(acc ^ splitmix(ix.wrapping_add(0x1234_5678_9abc_def1)));
    }
    acc
}

/// A ChaCha8 stream for the given (master, tag, indices) coordinate.
pub fn stream(master: u64, tag: &str, indices: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, tag, indices))
}
