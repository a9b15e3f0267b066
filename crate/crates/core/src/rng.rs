//! Seeded randomness with a frozen value stream.
//!
//! Key files and one-time pads must regenerate identically from the same
//! seed across releases, so bounded draws are done here on top of the raw
//! ChaCha20 output rather than through `rand`'s distribution helpers.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

/// Name written into generated key files.
pub const RNG_NAME: &str = "chacha20-rejection-v1";

pub struct SeededRng(ChaCha20Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha20Rng::seed_from_u64(seed))
    }

    /// Uniform integer in `0..bound`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        // Largest multiple of `bound` that fits; draws at or above it are rejected.
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.0.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Unbiased in-place shuffle, swapping from the last index down.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
