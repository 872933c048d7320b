//! Benchmarks for the symbolic side: antichain filtering and the two
//! co-rank routes.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rudin_bench::{monotone_instance, order_tuple_batch};
use rudin_core::fixtures::growing_window_family;
use rudin_core::{corank_general, corank_monotone, pareto_maximal};

fn bench_pareto(c: &mut Criterion) {
    let mut group = c.benchmark_group("pareto_maximal");
    for &count in &[100usize, 1_000, 5_000] {
        let tuples = order_tuple_batch(3, count, 20, 7);
        group.bench_with_input(BenchmarkId::from_parameter(count), &tuples, |b, input| {
            b.iter(|| pareto_maximal(black_box(input)).unwrap());
        });
    }
    group.finish();
}

fn bench_general_route(c: &mut Criterion) {
    let mut group = c.benchmark_group("corank_general/growing_window");
    for w in 1..=5 {
        let family = growing_window_family(w);
        group.bench_with_input(BenchmarkId::from_parameter(w), &family, |b, fam| {
            b.iter(|| corank_general(black_box(fam)));
        });
    }
    group.finish();
}

fn bench_monotone_route(c: &mut Criterion) {
    let (family, increasing) = monotone_instance(3, 8, 11);
    c.bench_function("corank_monotone/n3_window8", |b| {
        b.iter(|| corank_monotone(black_box(&family), black_box(&increasing)).unwrap());
    });
}

criterion_group!(
    benches,
    bench_pareto,
    bench_general_route,
    bench_monotone_route
);
criterion_main!(benches);
