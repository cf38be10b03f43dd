//! Seeded workloads shared by the benchmarks.

use minterp_core::instances::{random_hermite, random_lagrange, random_order, InstanceKind};
use minterp_core::Problem;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` reproducible problems in `dimension` variables with exactly `conditions` conditions each.
pub fn workload(seed: u64, kind: InstanceKind, dimension: usize, conditions: usize, count: usize) -> Vec<Problem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = random_order(&mut rng, dimension);
            match kind {
                InstanceKind::Lagrange => random_lagrange(&mut rng, order, conditions),
                InstanceKind::Hermite => random_hermite(&mut rng, order, conditions),
            }
        })
        .collect()
}
