use criterion::{criterion_group, criterion_main, Criterion};
use jz_core::exactlin::{rank, Field, Matrix};
use jz_core::fixtures::corpus;
use jz_core::jzreport::{jz, Bounds};
use jz_core::relbar::relative_chain_complex;

fn banded(n: usize) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if j >= i && j < i + 3 { (i + j) as i64 % 5 + 1 } else { 0 }).collect())
        .collect();
    Matrix::from_dense(Field::Rational, &rows)
}

fn bench_rank(c: &mut Criterion) {
    let m = banded(120);
    let mut g = c.benchmark_group("rank");
    g.bench_function("parallel", |b| {
        jz_core::par::set_sequential(false);
        b.iter(|| rank(&m))
    });
    g.bench_function("sequential", |b| {
        jz_core::par::set_sequential(true);
        b.iter(|| rank(&m))
    });
    g.finish();
}

fn bench_pipeline(c: &mut Criterion) {
    let fixtures = corpus(Field::Rational);
    let square = &fixtures[3];
    let quiver = &fixtures[4];
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    for (mode, sequential) in [("parallel", false), ("sequential", true)] {
        g.bench_function(format!("relative complex a3 N=6 {mode}"), |b| {
            jz_core::par::set_sequential(sequential);
            b.iter(|| relative_chain_complex(&quiver.embedding, &quiver.bimodule, 5).unwrap().complex.homology_dims())
        });
        g.bench_function(format!("jz square-zero {mode}"), |b| {
            jz_core::par::set_sequential(sequential);
            b.iter(|| jz(&square.embedding, &square.bimodule, Bounds::default()).unwrap())
        });
    }
    g.finish();
    jz_core::par::set_sequential(false);
}

criterion_group!(benches, bench_rank, bench_pipeline);
criterion_main!(benches);
