//! Criterion benches comparing the rayon data-parallel paths against the
//! sequential fallback on the engine's hotspots: exact polynomial matrix
//! products, a full deformed relation suite, and the contraction pipeline.
//!
//! Build with default features for the parallel/sequential comparison;
//! `--no-default-features` benches the purely sequential build.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use sjord_core::classical::Rep;
use sjord_core::jordanian::{deformed_relations_suite, deformed_representation};
use sjord_core::labels::GeneratorLabel;
use sjord_core::rmatrix::{contract, qybe_holds, rq_fundamental, transformation_g};

fn bench_matrix_mul(c: &mut Criterion) {
    // 36 x 36 matrices over Q[h] from the rank-5 tensor square
    let dt = deformed_representation(5, Rep::Fund2).unwrap();
    let t = dt.matrix(GeneratorLabel::T(1)).unwrap();
    let f = dt.matrix(sjord_core::labels::e(5, 1)).unwrap();

    let mut group = c.benchmark_group("mul_36x36_hpoly");
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(t.mul_sequential(black_box(f))))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(t.mul_parallel(black_box(f))))
    });
    group.finish();
}

fn bench_matrix_mul_large(c: &mut Criterion) {
    // 216 x 216 matrices over Q[h]: the triple tensor space at rank 5
    let dt = deformed_representation(5, Rep::Fund).unwrap();
    let t = dt.matrix(GeneratorLabel::T(1)).unwrap();
    let big = sjord_core::classical::tensor_lift(t, 3);
    let x = sjord_core::classical::tensor_lift(dt.matrix(sjord_core::labels::e(5, 1)).unwrap(), 3);

    let mut group = c.benchmark_group("mul_216x216_hpoly");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(big.mul_sequential(black_box(&x))))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(big.mul_parallel(black_box(&x))))
    });
    group.finish();
}

fn bench_deformed_suite(c: &mut Criterion) {
    // the feature flag decides whether checks run on rayon inside
    let dt = deformed_representation(3, Rep::Fund2).unwrap();
    c.bench_function("deformed_suite_n3_fund2", |b| {
        b.iter(|| {
            let report = deformed_relations_suite(black_box(&dt), true);
            assert!(report.passed());
            black_box(report)
        })
    });
}

fn bench_contraction(c: &mut Criterion) {
    let rq = rq_fundamental(2).unwrap();
    let g = transformation_g(2).unwrap();
    c.bench_function("contraction_pipeline_n2", |b| {
        b.iter(|| black_box(contract(black_box(&rq), black_box(&g)).unwrap()))
    });
}

fn bench_qybe(c: &mut Criterion) {
    let v = sjord_core::classical::fundamental_space(2);
    let rh = contract(&rq_fundamental(2).unwrap(), &transformation_g(2).unwrap()).unwrap();
    c.bench_function("qybe_contracted_27dim", |b| {
        b.iter(|| assert!(qybe_holds(black_box(&rh), &v)))
    });
}

criterion_group!(
    benches,
    bench_matrix_mul,
    bench_matrix_mul_large,
    bench_deformed_suite,
    bench_contraction,
    bench_qybe
);
criterion_main!(benches);
