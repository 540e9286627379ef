use std::hint::black_box;

use bicirc_bench::{dense_spec, family_spec};
use bicirc_core::laurent::forest_count_formula;
use bicirc_core::numeric::{
    asymptotic_constant, asymptotic_constant_integral, forest_count_chebyshev_default,
};
use bicirc_core::forest_count_oracle;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn exact_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for n in [8u64, 16, 32] {
        let spec = dense_spec(n);
        group.bench_with_input(BenchmarkId::new("oracle", n), &spec, |b, s| b.iter(|| forest_count_oracle(black_box(s))));
        group.bench_with_input(BenchmarkId::new("formula", n), &spec, |b, s| {
            b.iter(|| forest_count_formula(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn chebyshev_route(c: &mut Criterion) {
    let mut group = c.benchmark_group("chebyshev");
    for n in [10u64, 50, 100] {
        let spec = family_spec(6, n);
        group.bench_with_input(BenchmarkId::new("family6", n), &spec, |b, s| {
            b.iter(|| forest_count_chebyshev_default(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn mahler_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("mahler");
    group.sample_size(10);
    for id in [1u8, 6] {
        let spec = family_spec(id, 8);
        group.bench_with_input(BenchmarkId::new("roots", id), &spec, |b, s| {
            b.iter(|| asymptotic_constant(black_box(s), 128).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("quadrature", id), &spec, |b, s| {
            b.iter(|| asymptotic_constant_integral(black_box(s), 1e-12).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_routes, chebyshev_route, mahler_routes);
criterion_main!(benches);
