use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use topochrom::constructions::{gmyc_wide_extension_iter, oddsch_pipeline, sg_with_interval_coloring, widen_to_local, IntervalRule};
use topochrom::families::{complete, schrijver};
use topochrom::geometry::{borsuk_wide_check, cover_plus, sphere_samples, verify_cover};
use topochrom::{is_s_wide, Coloring};

fn bench_families(c: &mut Criterion) {
    c.bench_function("schrijver/33,15", |b| b.iter(|| schrijver(black_box(33), black_box(15)).unwrap()));
}

fn bench_colorings(c: &mut Criterion) {
    let mut group = c.benchmark_group("colorings");
    group.sample_size(10);
    group.bench_function("interval_sg33_15", |b| {
        b.iter(|| sg_with_interval_coloring(33, 15, &[9, 9, 9, 5, 1], IntervalRule::SmallestAnchor).unwrap())
    });
    let (g, col) = sg_with_interval_coloring(15, 7, &[5, 5, 5], IntervalRule::SmallestAnchor).unwrap();
    group.bench_function("three_wide_check_sg15_7", |b| b.iter(|| is_s_wide(&g, &col, 3).unwrap()));
    group.bench_function("widen_sg15_7", |b| b.iter(|| widen_to_local(&g, &col).unwrap()));
    let k2 = complete(2);
    let base = Coloring::new(vec![1, 2]);
    group.bench_function("wide_extension_7_7_7", |b| b.iter(|| gmyc_wide_extension_iter(&k2, &base, &[7, 7, 7]).unwrap()));
    group.bench_function("pipeline_3_2", |b| b.iter(|| oddsch_pipeline(3, 2).unwrap()));
    group.finish();
}

fn bench_geometry(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometry");
    group.sample_size(10);
    let cover = cover_plus(3).unwrap();
    group.bench_function("cover_plus_3_10k", |b| b.iter(|| verify_cover(&cover, 10_000, 1)));
    let pts = sphere_samples(2, 2000, 12).unwrap();
    group.bench_function("borsuk_2_2000", |b| b.iter(|| borsuk_wide_check(2, 1.99, &pts).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_families, bench_colorings, bench_geometry);
criterion_main!(benches);
