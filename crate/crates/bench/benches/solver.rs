use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sigdom::constructions::construct_igraph;
use sigdom::domination::{is_signed_dds, min_signed_dds, SolveOptions};
use sigdom::families::{igraph, petersen};
use sigdom::SignedGraph;

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_signed_dds");
    let opts = SolveOptions::default();
    for (n, k) in [(6, 1), (8, 3), (10, 3), (12, 5)] {
        let s = SignedGraph::random(petersen(n, k).unwrap().graph, 1, 0.5).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("P({n},{k})")),
            &s,
            |b, s| b.iter(|| min_signed_dds(black_box(s), &opts).unwrap()),
        );
    }
    let s = SignedGraph::random(petersen(12, 5).unwrap().graph, 1, 0.5).unwrap();
    let parallel = SolveOptions {
        threads: 4,
        ..SolveOptions::default()
    };
    group.bench_function("P(12,5)/4 threads", |b| {
        b.iter(|| min_signed_dds(black_box(&s), &parallel).unwrap())
    });
    group.finish();
}

fn verifier(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_signed_dds");
    for n in [20, 60, 200] {
        let g = petersen(n, 3).unwrap().graph;
        let d = construct_igraph(n, 1, 3).unwrap().set;
        let s = SignedGraph::random(g, 2, 0.5).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &(s, d), |b, (s, d)| {
            b.iter(|| is_signed_dds(black_box(s), black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    c.bench_function("construct all I(n,j,k), n <= 60, j <= k <= 5", |b| {
        b.iter(|| {
            let mut total = 0;
            for n in 11..=60 {
                for k in 1..=5 {
                    for j in 1..=k {
                        if let Ok(r) = construct_igraph(n, j, k) {
                            total += r.set.len();
                        }
                    }
                }
            }
            total
        })
    });
    c.bench_function("igraph(60,4,5)", |b| {
        b.iter(|| igraph(black_box(60), 4, 5).unwrap())
    });
}

criterion_group!(benches, solver, verifier, constructions);
criterion_main!(benches);
