//! Benchmarks for the hot paths of the pipeline: group enumeration,
//! boundary assembly, exact rank, and the truncation threshold scan.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use l2dim_bench::{cyclic_fixture, grid_fixture, ramp_fixture};
use l2dim_core::{
    approximate_bounded, rank_exact, realize, BoundaryMode, CayleyComplex, SparseRationalMatrix,
};

fn grid_boundaries(m: usize) -> (SparseRationalMatrix, SparseRationalMatrix) {
    let (presentation, realization) = grid_fixture(m);
    let active = [0];
    let complex = CayleyComplex::build(&realization, &presentation, &active).unwrap();
    (complex.boundary1(), complex.boundary2(BoundaryMode::Path))
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for k in [128usize, 512] {
        let shift: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        group.bench_with_input(BenchmarkId::new("cyclic", k), &shift, |b, shift| {
            b.iter(|| realize(black_box(std::slice::from_ref(shift)), k).unwrap())
        });
    }
    group.finish();
}

fn bench_boundary_assembly(c: &mut Criterion) {
    let (presentation, realization) = grid_fixture(6);
    let active = [0];
    let complex = CayleyComplex::build(&realization, &presentation, &active).unwrap();
    let mut group = c.benchmark_group("boundary2");
    group.bench_function("path", |b| {
        b.iter(|| black_box(&complex).boundary2(BoundaryMode::Path))
    });
    group.bench_function("fox", |b| {
        b.iter(|| black_box(&complex).boundary2(BoundaryMode::Fox))
    });
    group.finish();
}

fn bench_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank_exact");
    group.sample_size(20);
    for m in [4usize, 6] {
        let (d1, d2) = grid_boundaries(m);
        group.bench_with_input(BenchmarkId::new("grid-d1", m), &d1, |b, matrix| {
            b.iter(|| rank_exact(black_box(matrix)))
        });
        group.bench_with_input(BenchmarkId::new("grid-d2", m), &d2, |b, matrix| {
            b.iter(|| rank_exact(black_box(matrix)))
        });
    }
    // Dense path: one relator sheet over a small cyclic group keeps the
    // matrix under the dense cutoff.
    let (presentation, realization) = cyclic_fixture(24);
    let active = [0];
    let complex = CayleyComplex::build(&realization, &presentation, &active).unwrap();
    let d2 = complex.boundary2(BoundaryMode::Path);
    group.bench_function("cyclic-24-d2", |b| b.iter(|| rank_exact(black_box(&d2))));
    group.finish();
}

fn bench_truncation(c: &mut Criterion) {
    let (graph, f) = ramp_fixture(256);
    // An epsilon small enough that the scan must walk essentially every
    // breakpoint before the deficit clears it.
    c.bench_function("approximate_bounded/ramp-256", |b| {
        b.iter(|| approximate_bounded(black_box(&graph), black_box(&f), 2.0, 0.5))
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_boundary_assembly,
    bench_rank,
    bench_truncation
);
criterion_main!(benches);
