//! Deterministic input builders shared by the benchmark targets.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rudin_core::fixtures::repeated_points_counterexample;
use rudin_core::sampling;
use rudin_core::{
    assemble_point_module, corank_general, required_truncation, OrderTuple, RudinFamily,
    TensorModule,
};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A batch of random order tuples with entries in `1..=max_entry`.
pub fn order_tuple_batch(n: usize, count: usize, max_entry: u32, seed: u64) -> Vec<OrderTuple> {
    sampling::order_tuples(&mut seeded(seed), n, count, max_entry)
}

/// A random structurally monotone family plus its increasing set.
pub fn monotone_instance(n: usize, window_len: usize, seed: u64) -> (RudinFamily, Vec<usize>) {
    sampling::monotone_family(&mut seeded(seed), n, window_len, 3, 2)
}

/// The repeated-points witness module (dimension 3) at a configurable
/// truncation, for scaling the numeric pipeline end to end.
pub fn witness_module(truncation: usize) -> TensorModule {
    let fixture = repeated_points_counterexample();
    let report = corank_general(&fixture.reference.family);
    let witness = report
        .per_tuple
        .iter()
        .find(|t| t.count == 2)
        .expect("witness pair is present");
    assemble_point_module(
        witness.tuple.primes(),
        witness.minimal_rep.tuples(),
        truncation,
    )
    .expect("witness module is desk-scale")
}

/// The coarsest truncation the witness module accepts.
pub fn minimum_witness_truncation() -> usize {
    required_truncation(0.5, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_produce_valid_inputs() {
        let tuples = order_tuple_batch(3, 50, 5, 1);
        assert_eq!(tuples.len(), 50);
        assert!(tuples.iter().all(|t| t.len() == 3));

        let (family, increasing) = monotone_instance(3, 6, 2);
        assert_eq!(family.n(), 3);
        assert!(!increasing.is_empty());

        let module = witness_module(minimum_witness_truncation());
        assert_eq!(module.dim(), 3);
    }
}
