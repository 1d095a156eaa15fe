use bilinear_core::biortho::{planewave_partial_sum, DunklSampler, PWFunction};
use bilinear_core::spectrum::{Sign, SpectralProblem};
use bilinear_core::Params;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn planewave(c: &mut Criterion) {
    let p = Params::new(0.3, 0.2).unwrap();
    c.bench_function("planewave_partial_sum_40", |b| {
        b.iter(|| planewave_partial_sum(p, black_box(2.0), black_box(0.3), 40).unwrap())
    });
}

fn sampling(c: &mut Criterion) {
    let f = PWFunction::from_fn(0.5, |t| (1.0 - t * t).powi(2)).unwrap();
    let mut g = c.benchmark_group("sampling");
    g.sample_size(10);
    g.bench_function("sampler_setup_100", |b| {
        b.iter(|| DunklSampler::new(&f, 100).unwrap())
    });
    let s = DunklSampler::new(&f, 400).unwrap();
    g.bench_function("sampler_sum_400", |b| {
        b.iter(|| s.sum(black_box(1.7), 400).unwrap())
    });
    g.finish();
}

fn spectrum(c: &mut Criterion) {
    let p = SpectralProblem::new(Params::new(0.4, 0.1).unwrap(), 80, 3).unwrap();
    c.bench_function("eigen_residual_80", |b| {
        b.iter(|| p.eigen_residual(black_box(2), Sign::Plus, 80).unwrap())
    });
    c.bench_function("eigenfunction_80", |b| {
        b.iter(|| {
            p.eigenfunction(1, Sign::Minus, black_box(0.37), 80)
                .unwrap()
        })
    });
}

criterion_group!(benches, planewave, sampling, spectrum);
criterion_main!(benches);
