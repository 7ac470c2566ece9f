//! Criterion benchmarks for the hot kernels: series summation, contour
//! quadrature, the Rodrigues recursion and the monomial commutation checks.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hgc_core::miller::{miller_generators, verify_miller_commutation, Representation};
use hgc_core::orthopoly::{classical_poly, orthogonality_check, Family, FamilySpec};
use hgc_core::params::dict;
use hgc_core::quad::{integrate, ContourSpec};
use hgc_core::series::{olver_f, unified_f, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use hgc_core::transforms::{named_representation, Named};
use num_complex::Complex64;
use std::hint::black_box;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn bench_series(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("series");
    let p = dict::gauss_2f1(c(0.45), c(1.35), c(0.85));
    group.bench_function("unified_2f1_z0.4", |b| {
        b.iter(|| unified_f(black_box(&p), c(0.4), DEFAULT_TOL, DEFAULT_MAX_TERMS).unwrap())
    });
    let p0 = dict::zero_f1(c(1.5));
    group.bench_function("olver_0f1_z1", |b| {
        b.iter(|| olver_f(black_box(&p0), c(1.0)).unwrap())
    });
    group.finish();
}

fn bench_quadrature(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("quadrature");
    group.sample_size(20);
    group.bench_function("bessel_loop", |b| {
        b.iter(|| {
            integrate(
                |t| (t + c(1.0) / t).exp() / t,
                &ContourSpec::circle(c(0.0), 1.0),
            )
            .unwrap()
        })
    });
    group.bench_function("2f1_euler_halfline", |b| {
        b.iter(|| {
            named_representation(
                Named::Repr2F1Euler {
                    a: c(1.0),
                    b: c(0.5),
                    c: c(2.0),
                },
                c(0.3),
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_polynomials(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("polynomials");
    let spec = FamilySpec::new(Family::Jacobi {
        alpha: c(0.5),
        beta: c(-0.25),
    });
    for n in [8u32, 16] {
        group.bench_with_input(BenchmarkId::new("jacobi_rodrigues", n), &n, |b, &n| {
            b.iter(|| classical_poly(black_box(&spec), n))
        });
    }
    group.sample_size(10);
    group.bench_function("gram_laguerre_n10", |b| {
        let spec = FamilySpec::new(Family::Laguerre { alpha: c(0.5) });
        b.iter(|| orthogonality_check(black_box(&spec), 10).unwrap())
    });
    group.finish();
}

fn bench_lie(cr: &mut Criterion) {
    let mut group = cr.benchmark_group("lie");
    group.sample_size(10);
    let p = dict::gauss_2f1(c(0.3), c(1.6), c(0.9));
    group.bench_function("full_rep_commutation_bound6", |b| {
        let gens = miller_generators(&p, Representation::Full);
        b.iter(|| verify_miller_commutation(black_box(&gens), 6))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_series,
    bench_quadrature,
    bench_polynomials,
    bench_lie
);
criterion_main!(benches);
