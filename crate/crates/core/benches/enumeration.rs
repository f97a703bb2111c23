use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use schubert_core::par::Execution;
use schubert_core::verify;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("skew_census");
    group.sample_size(10);
    for n in [5, 6] {
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| verify::skew_census(n, mode)));
        }
    }
    group.finish();
}

fn disjoint_products(c: &mut Criterion) {
    let mut group = c.benchmark_group("disjoint_products");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, 6), |b| b.iter(|| verify::theorem_c(6, mode)));
    }
    group.finish();
}

fn chain_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain_counts");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, 5), |b| b.iter(|| verify::prop_chains(5, 2, mode)));
    }
    group.finish();
}

criterion_group!(benches, census, disjoint_products, chain_counts);
criterion_main!(benches);
