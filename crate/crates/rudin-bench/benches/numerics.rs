//! Benchmarks for the numeric side: module assembly and the two rank
//! oracles on the repeated-points witness module.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rudin_bench::witness_module;
use rudin_core::{nakayama_corank, randomized_min_generators};

fn bench_assembly(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness_module_end_to_end");
    for &truncation in &[64usize, 128, 256] {
        group.bench_with_input(
            BenchmarkId::from_parameter(truncation),
            &truncation,
            |b, &t| {
                b.iter(|| witness_module(black_box(t)));
            },
        );
    }
    group.finish();
}

fn bench_rank_oracles(c: &mut Criterion) {
    let module = witness_module(128);
    c.bench_function("nakayama_corank/witness", |b| {
        b.iter(|| nakayama_corank(black_box(&module)).unwrap());
    });
    c.bench_function("randomized_min_generators/witness", |b| {
        b.iter(|| randomized_min_generators(black_box(&module), 2, 9).r());
    });
}

criterion_group!(benches, bench_assembly, bench_rank_oracles);
criterion_main!(benches);
