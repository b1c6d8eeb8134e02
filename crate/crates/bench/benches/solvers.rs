use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use topochrom::families::{cycle, gen_mycielski, kneser, schrijver};
use topochrom::solvers::{chromatic_number, circular_chromatic, fractional_chromatic, local_chromatic};

fn bench_chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic");
    for (n, k) in [(7, 2), (8, 3), (9, 3)] {
        let g = schrijver(n, k).unwrap();
        group.bench_with_input(BenchmarkId::new("schrijver", format!("{n},{k}")), &g, |b, g| {
            b.iter(|| chromatic_number(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn bench_local(c: &mut Criterion) {
    let mut group = c.benchmark_group("local");
    let petersen = kneser(5, 2).unwrap();
    let cases = [
        ("sg7_2", schrijver(7, 2).unwrap()),
        ("m_petersen", gen_mycielski(&petersen, 2).unwrap()),
    ];
    for (name, g) in &cases {
        group.bench_function(*name, |b| b.iter(|| local_chromatic(black_box(g)).unwrap()));
    }
    group.finish();
}

fn bench_fractional(c: &mut Criterion) {
    let mc5 = gen_mycielski(&cycle(5).unwrap(), 2).unwrap();
    let sg = schrijver(8, 3).unwrap();
    c.bench_function("fractional/m_c5", |b| b.iter(|| fractional_chromatic(black_box(&mc5)).unwrap()));
    c.bench_function("fractional/sg8_3", |b| b.iter(|| fractional_chromatic(black_box(&sg)).unwrap()));
}

fn bench_circular(c: &mut Criterion) {
    let mut group = c.benchmark_group("circular");
    group.sample_size(10);
    let cases = [
        ("sg9_4", schrijver(9, 4).unwrap()),
        ("sg7_2", schrijver(7, 2).unwrap()),
        ("m_c5", gen_mycielski(&cycle(5).unwrap(), 2).unwrap()),
    ];
    for (name, g) in &cases {
        group.bench_function(*name, |b| b.iter(|| circular_chromatic(black_box(g)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_chromatic, bench_local, bench_fractional, bench_circular);
criterion_main!(benches);
