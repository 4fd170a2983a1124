use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kegraph_bench::bench_graphs;
use kegraph_core::catalog::catalog;
use kegraph_core::collections::check_simplicial_complex;
use kegraph_core::critical::critical_profile;
use kegraph_core::independence::{alpha, omega};
use kegraph_core::matching::maximum_matching;

fn bench_alpha(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha");
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| b.iter(|| alpha(black_box(&g))));
    }
    group.finish();
}

fn bench_omega(c: &mut Criterion) {
    let mut group = c.benchmark_group("omega");
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| b.iter(|| omega(black_box(&g)).unwrap()));
    }
    group.finish();
}

fn bench_matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximum-matching");
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| b.iter(|| maximum_matching(black_box(&g))));
    }
    group.finish();
}

fn bench_critical_profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("critical-profile");
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| b.iter(|| critical_profile(black_box(&g)).unwrap()));
    }
    group.finish();
}

fn bench_simplicial(c: &mut Criterion) {
    let mut group = c.benchmark_group("simplicial-complex");
    for (name, g) in bench_graphs() {
        group.bench_function(name, |b| {
            b.iter(|| check_simplicial_complex(black_box(&g), 12))
        });
    }
    group.finish();
}

fn bench_catalog(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("up-to-7", |b| b.iter(|| catalog(black_box(7)).unwrap()));
    group.finish();
}

criterion_group!(
    benches,
    bench_alpha,
    bench_omega,
    bench_matching,
    bench_critical_profile,
    bench_simplicial,
    bench_catalog
);
criterion_main!(benches);
