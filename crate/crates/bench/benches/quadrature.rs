use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use weylgerbe::{
    chern_number, integrate_beta_sigma, run_suite, QuadratureMesh, Suite, SuiteConfig,
};

fn bench_sphere_integrals(c: &mut Criterion) {
    let mut group = c.benchmark_group("sphere_integrals");
    group.sample_size(20);
    for order in [16usize, 32] {
        let mesh = QuadratureMesh::product_gauss(order, 2).unwrap();
        group.bench_with_input(BenchmarkId::new("chern", order), &order, |b, _| {
            b.iter(|| chern_number(0, 2, black_box(&mesh)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("beta", order), &order, |b, _| {
            b.iter(|| integrate_beta_sigma(2, black_box(&mesh)).unwrap())
        });
    }
    group.finish();
}

fn bench_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    let cfg = SuiteConfig {
        n: 3,
        seed: 1,
        tol: 1e-9,
        mesh_order: 16,
    };
    group.bench_function("cocycles_n3", |b| {
        b.iter(|| run_suite(Suite::Cocycles, black_box(&cfg)).unwrap())
    });
    group.bench_function("appendix_n3", |b| {
        b.iter(|| run_suite(Suite::AppendixLemmas, black_box(&cfg)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_sphere_integrals, bench_suites);
criterion_main!(benches);
