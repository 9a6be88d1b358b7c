use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ecover_core::degeneration::{assemble_deformation_system, deform};
use ecover_core::{build_family, staircase};

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("family");
    for g in [2i64, 6, 12] {
        group.bench_with_input(BenchmarkId::new("build", g), &g, |b, &g| {
            b.iter(|| build_family(black_box(g)).unwrap())
        });
        let f = build_family(g).unwrap();
        group.bench_with_input(BenchmarkId::new("verify_identity", g), &f, |b, f| {
            b.iter(|| black_box(&f.cover).verify_identity())
        });
        group.bench_with_input(BenchmarkId::new("certify", g), &f, |b, f| {
            b.iter(|| black_box(f).certify().unwrap())
        });
    }
    group.finish();
}

fn degeneration(c: &mut Criterion) {
    let mut group = c.benchmark_group("degeneration");
    group.sample_size(20);
    for g in [2i64, 4, 6] {
        group.bench_with_input(BenchmarkId::new("assemble", g), &g, |b, &g| {
            b.iter(|| assemble_deformation_system(black_box(g)).unwrap())
        });
        let system = assemble_deformation_system(g).unwrap();
        group.bench_with_input(BenchmarkId::new("solve", g), &system, |b, s| {
            b.iter(|| black_box(s).solve())
        });
        group.bench_with_input(BenchmarkId::new("deform", g), &g, |b, &g| {
            b.iter(|| deform(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn origami(c: &mut Criterion) {
    let mut group = c.benchmark_group("origami");
    for g in [2i64, 20, 200] {
        let d = staircase(g).unwrap();
        group.bench_with_input(BenchmarkId::new("genus", g), &d, |b, d| {
            b.iter(|| black_box(d).genus().unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, family, degeneration, origami);
criterion_main!(benches);
