//! Seeded fixtures shared by the benchmarks.

use qubo_core::workload::{random_graph, EDGE_DENSITY};
use qubo_core::{reduce_clique_to_squbo, reduce_ilp_to_qubo, IlpInstance, QuboInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every pair present, coefficients uniform in `[-50, 50]`.
pub fn dense_qubo(n: usize, seed: u64) -> QuboInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<(usize, usize, i64)> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, rng.gen_range(-50..=50)))
        .filter(|e| e.2 != 0)
        .collect();
    QuboInstance::from_entries(n, entries).expect("upper-triangular entries")
}

pub fn clique_qubo(n: usize, seed: u64) -> QuboInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    reduce_clique_to_squbo(&random_graph(n, EDGE_DENSITY, &mut rng))
}

/// A two-row program whose QUBO has 4 + 2k variables.
pub fn ilp_qubo() -> QuboInstance {
    let ilp = IlpInstance::from_i64(&[&[2, 3, -1, 1], &[1, -2, 3, 2]], &[5, 4], &[3, 4, 2, 5]).expect("fixed shape");
    reduce_ilp_to_qubo(&ilp).expect("non-negative bounds").qubo
}
