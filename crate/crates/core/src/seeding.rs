//! Deterministic RNG derivation.
//!
//! Every stochastic step in the pipeline (synthetic data, validation picks,
//! weight init, epoch shuffles, sweep cells) draws from a generator derived
//! from the global seed plus a domain string and integer tags. Two call sites
//! with different tags get statistically independent streams, and the mapping
//! is stable across platforms.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Derive a seeded generator from `(seed, domain, tags)`.
pub fn derive_rng(seed: u64, domain: &str, tags: &[u64]) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update((domain.len() as u64).to_le_bytes());
    hasher.update(domain.as_bytes());
    for t in tags {
        hasher.update(t.to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

/// Collapse `(seed, domain, tags)` to a single u64, for APIs that take a seed.
pub fn derive_seed(seed: u64, domain: &str, tags: &[u64]) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update((domain.len() as u64).to_le_bytes());
    hasher.update(domain.as_bytes());
    for t in tags {
        hasher.update(t.to_le_bytes());
    }
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_inputs_same_stream() {
        let mut a = derive_rng(7, "x", &[1, 2]);
        let mut b = derive_rng(7, "x", &[1, 2]);
        for _ in 0..16 {
            assert_eq!(a.gen::<u64>(), b.gen::<u64>());
        }
    }

    #[test]
    fn different_tags_differ() {
        let mut a = derive_rng(7, "x", &[1]);
        let mut b = derive_rng(7, "x", &[2]);
        let va: Vec<u64> = (0..4).map(|_| a.gen()).collect();
        let vb: Vec<u64> = (0..4).map(|_| b.gen()).collect();
        assert_ne!(va, vb);
    }

    #[test]
    fn domain_separates() {
        assert_ne!(derive_seed(7, "a", &[]), derive_seed(7, "b", &[]));
    }
}
