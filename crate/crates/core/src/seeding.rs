//! Deterministic stream derivation for parallel Monte Carlo.
//!
//! One 64-bit master seed determines every random draw in a run. Each logical
//! unit of work (a sample path, a lattice trial, a tree node) gets its own
//! ChaCha8 stream via `(master seed -> key, (domain tag, index) -> stream id)`,
//! so results do not depend on how work is split across workers.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Namespace tags separating the random streams of the different modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Domain {
    LevyPath = 1,
    Excursion = 2,
    Reroot = 3,
    Lambda = 4,
    FragTree = 5,
    LatticeTrial = 6,
    LatticeColor = 7,
    Generic = 15,
}

/// ChaCha8 stream for work item `index` of namespace `domain`.
///
/// ChaCha's stream id is part of the counter, so distinct `(domain, index)`
/// pairs yield independent streams under the same key.
pub fn stream_rng(master: u64, domain: Domain, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    debug_assert!(index < 1 << 56);
    rng.set_stream(((domain as u64) << 56) | (index & ((1 << 56) - 1)));
    rng
}

/// splitmix64 finalizer; a stateless 64-bit mixer.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Order-independent per-item 64-bit hash of `(key, item)`.
#[inline]
pub fn mix2(key: u64, item: u64) -> u64 {
    splitmix64(key ^ splitmix64(item))
}

/// Uniform in [0, 1) from the top 53 bits of `mix2(key, item)`.
#[inline]
pub fn unit_uniform(key: u64, item: u64) -> f64 {
    (mix2(key, item) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Derived sub-key for item hashing (lattice edges, cluster colors).
pub fn item_key(master: u64, domain: Domain, index: u64) -> u64 {
    splitmix64(splitmix64(master ^ ((domain as u64) << 56)) ^ index)
}
