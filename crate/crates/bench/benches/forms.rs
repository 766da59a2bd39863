use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use weylgerbe::{beta_form, dbeta_form, diagonal_trace_form, sample};

fn bench_trace_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace_forms");
    for n in [2usize, 4, 8] {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let frame = sample::random_frame(n, &mut rng);
        let x = sample::random_flag_tangent(n, &mut rng);
        let y = sample::random_flag_tangent(n, &mut rng);
        group.bench_with_input(BenchmarkId::new("diagonal", n), &n, |b, _| {
            b.iter(|| diagonal_trace_form(black_box(&frame), 0, &x, &y).unwrap())
        });

        let t = sample::random_lift(n, &mut rng).project();
        group.bench_with_input(BenchmarkId::new("beta", n), &n, |b, _| {
            b.iter(|| beta_form(black_box(&t), &frame, &x, &y).unwrap())
        });

        let u = sample::random_mixed_tangent(n, &mut rng);
        let v = sample::random_mixed_tangent(n, &mut rng);
        let w = sample::random_mixed_tangent(n, &mut rng);
        group.bench_with_input(BenchmarkId::new("dbeta", n), &n, |b, _| {
            b.iter(|| dbeta_form(black_box(&t), &frame, &u, &v, &w).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_trace_forms);
criterion_main!(benches);
