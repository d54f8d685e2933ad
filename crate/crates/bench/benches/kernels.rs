use criterion::{black_box, criterion_group, criterion_main, Criterion};

use planex_core::canon::canonical_code;
use planex_core::counting::{count_p4, count_paths_brute, count_triangles};
use planex_core::enumerate::{brute_force_triangulations, enumerate_triangulations};
use planex_core::families::make_fn;
use planex_core::planarity::is_planar;

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_triangulations n=8", |b| {
        b.iter(|| enumerate_triangulations(black_box(8)).unwrap().len())
    });
    c.bench_function("enumerate_triangulations n=10", |b| {
        b.iter(|| enumerate_triangulations(black_box(10)).unwrap().len())
    });
    c.bench_function("brute_force_triangulations n=6", |b| {
        b.iter(|| brute_force_triangulations(black_box(6)).unwrap().len())
    });
}

fn bench_canon(c: &mut Criterion) {
    let set = enumerate_triangulations(10).unwrap();
    let graphs: Vec<_> = set.members().map(|(_, e)| e.graph().clone()).collect();
    c.bench_function("canonical_code over the n=10 census", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| canonical_code(black_box(g)).as_bytes()[1] as u64)
                .sum::<u64>()
        })
    });
}

fn bench_counting(c: &mut Criterion) {
    let f32 = make_fn(32).unwrap();
    c.bench_function("count_p4 on F_32", |b| b.iter(|| count_p4(black_box(&f32))));
    c.bench_function("count_triangles on F_32", |b| {
        b.iter(|| count_triangles(black_box(&f32)))
    });
    let f10 = make_fn(10).unwrap();
    c.bench_function("count_paths_brute k=4 on F_10", |b| {
        b.iter(|| count_paths_brute(black_box(&f10), 4).unwrap())
    });
}

fn bench_planarity(c: &mut Criterion) {
    let f20 = make_fn(20).unwrap();
    c.bench_function("is_planar on F_20", |b| {
        b.iter(|| is_planar(black_box(&f20)))
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_canon,
    bench_counting,
    bench_planarity
);
criterion_main!(benches);
