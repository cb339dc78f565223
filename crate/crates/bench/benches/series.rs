use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zeta_lab::{eta_accelerated, eta_partial, gamma_complex, hardy_z, zeta_from_eta, Complex64};

fn eta(c: &mut Criterion) {
    let mut group = c.benchmark_group("eta");
    for t in [1.0, 14.134725, 50.0, 100.0] {
        let s = Complex64::new(0.5, t);
        group.bench_with_input(BenchmarkId::new("accelerated", t), &s, |b, &s| {
            b.iter(|| eta_accelerated(black_box(s), 1e-12).unwrap())
        });
    }
    let s = Complex64::new(0.5, 14.134725);
    for n in [1_000u64, 100_000] {
        group.bench_with_input(BenchmarkId::new("partial", n), &n, |b, &n| {
            b.iter(|| eta_partial(black_box(s), n).unwrap())
        });
    }
    group.finish();
}

fn zeta_and_gamma(c: &mut Criterion) {
    c.bench_function("zeta_from_eta(0.5+30i)", |b| {
        b.iter(|| zeta_from_eta(black_box(Complex64::new(0.5, 30.0))).unwrap())
    });
    c.bench_function("zeta fallback at factor zero", |b| {
        let s = zeta_lab::series::factor_zero(1);
        b.iter(|| zeta_from_eta(black_box(s)).unwrap())
    });
    c.bench_function("gamma_complex(0.3+20i)", |b| {
        b.iter(|| gamma_complex(black_box(Complex64::new(0.3, 20.0))).unwrap())
    });
    c.bench_function("hardy_z(21.0)", |b| b.iter(|| hardy_z(black_box(21.0)).unwrap()));
}

criterion_group!(benches, eta, zeta_and_gamma);
criterion_main!(benches);
