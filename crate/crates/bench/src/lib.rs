//! Shared inputs for the criterion benchmarks.

use mopguard::families::random_mop;
use mopguard::report::instance_seed;
use mopguard::Mop;

/// `count` seeded random mops of order `n`.
pub fn random_corpus(n: usize, count: usize, seed: u64) -> Vec<Mop> {
    (0..count).map(|i| random_mop(n, instance_seed(seed, n, i)).expect("n >= 3")).collect()
}
