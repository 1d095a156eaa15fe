use bilinear_core::quad::integrate_bessel_product;
use bilinear_core::specfun::{bessel_j, bessel_zeros, dunkl_kernel};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn bessel(c: &mut Criterion) {
    let mut g = c.benchmark_group("bessel_j");
    for x in [0.5, 8.0, 60.0, 400.0] {
        g.bench_with_input(BenchmarkId::from_parameter(x), &x, |b, &x| {
            b.iter(|| bessel_j(black_box(1.3), black_box(x)).unwrap())
        });
    }
    g.finish();
    c.bench_function("dunkl_kernel", |b| {
        b.iter(|| dunkl_kernel(black_box(0.4), black_box(7.3)).unwrap())
    });
    c.bench_function("bessel_zeros_50", |b| {
        b.iter(|| bessel_zeros(black_box(1.5), 50).unwrap())
    });
}

fn oscillatory(c: &mut Criterion) {
    c.bench_function("integrate_bessel_product", |b| {
        b.iter(|| integrate_bessel_product(black_box(0.2), 2.5, 0.3, black_box(0.7)).unwrap())
    });
}

criterion_group!(benches, bessel, oscillatory);
criterion_main!(benches);
