//! Deterministic random-number streams.
//!
//! Every stochastic step in the crate draws from a [`ChaCha8Rng`] whose key is
//! derived from a user seed plus a path of integers (domain tag, replicate
//! index, permutation index, ...). Results therefore depend only on the seed
//! and the logical position of the draw, never on thread scheduling.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Domain tag for permutation streams.
pub const DOMAIN_PERMUTE: u64 = 1;
/// Domain tag for scenario data draws.
pub const DOMAIN_DRAW: u64 = 2;
/// Domain tag for synthetic curve sets in tests.
pub const DOMAIN_CURVES: u64 = 3;

#[inline]
fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mix `seed` with a derivation path into a single 64-bit subseed.
pub fn subseed(seed: u64, path: &[u64]) -> u64 {
    let mut state = seed;
    let mut out = splitmix(&mut state);
    for &part in path {
        state ^= part;
        out = splitmix(&mut state);
    }
    out
}

/// Build an independent RNG stream for the given seed and derivation path.
pub fn stream(seed: u64, path: &[u64]) -> ChaCha8Rng {
    let mut state = seed;
    let _ = splitmix(&mut state);
    for &part in path {
        state ^= part;
        let _ = splitmix(&mut state);
    }
    let mut key = [0u8; 32];
    for chunk in key.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix(&mut state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}
