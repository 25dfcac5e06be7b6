//! Deterministic fixtures shared by the benchmarks.

use circulant_core::matcore::random::{random_matrix, random_probability_vector, random_unit_vector, seeded};
use circulant_core::{BipartiteOperator, ChannelWeights, ComplexMatrix, StateTuple};

pub const DIMS: [usize; 4] = [4, 8, 16, 32];

pub fn weights(d: usize, seed: u64) -> ChannelWeights {
    ChannelWeights::new(random_probability_vector(d, &mut seeded(seed))).expect("valid weights")
}

pub fn matrix(d: usize, seed: u64) -> ComplexMatrix {
    random_matrix(d, d, &mut seeded(seed))
}

pub fn tuple(n: usize, d: usize, seed: u64) -> StateTuple {
    let mut rng = seeded(seed);
    StateTuple::new((0..n).map(|_| random_unit_vector(d, &mut rng)).collect()).expect("valid tuple")
}

pub fn bipartite(d_a: usize, d_b: usize, seed: u64) -> BipartiteOperator {
    let m = random_matrix(d_a * d_b, d_a * d_b, &mut seeded(seed));
    BipartiteOperator::new(d_a, d_b, m).expect("square operator")
}
