use bendmin::dp::Solver;
use bendmin::gen::random_cubic_planar;
use bendmin::realize::compact;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn edge_mode(c: &mut Criterion) {
    let mut group = c.benchmark_group("edge");
    for n in [250usize, 500, 1000, 2000] {
        let (g, emb) = random_cubic_planar(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| Solver::new(&g, &emb).unwrap().ref_edge(black_box(0)).unwrap().bends)
        });
    }
    group.finish();
}

fn global_mode(c: &mut Criterion) {
    let mut group = c.benchmark_group("global");
    group.sample_size(10);
    for n in [100usize, 200, 400] {
        let (g, emb) = random_cubic_planar(n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| Solver::new(&g, black_box(&emb)).unwrap().global().unwrap().bends)
        });
    }
    group.finish();
}

fn compaction(c: &mut Criterion) {
    let mut group = c.benchmark_group("compact");
    for n in [250usize, 1000] {
        let (g, emb) = random_cubic_planar(n, 1);
        let rep = Solver::new(&g, &emb).unwrap().ref_edge(0).unwrap().rep;
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| b.iter(|| compact(black_box(&rep)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, edge_mode, global_mode, compaction);
criterion_main!(benches);
