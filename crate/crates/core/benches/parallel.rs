//! Sequential (one worker) against data-parallel (all cores) runs of the
//! two parallel hot paths. Build with `--no-default-features` to compare
//! against the rayon-free fallback as well.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cycsub::constructions::build_extremal;
use cycsub::counting::{cyc_count_with, estimate_h, CountOptions, Decider, COUNT_LIMIT};
use cycsub::par;

fn modes() -> [(&'static str, usize); 2] {
    [("sequential", 1), ("parallel", par::AUTO)]
}

fn count(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyc_count");
    group.sample_size(10);
    for n in [7, 8] {
        let g = build_extremal(n, &[n + 1]).unwrap().graph;
        for (name, workers) in modes() {
            group.bench_with_input(BenchmarkId::new(name, 2 * n), &g, |b, g| {
                b.iter(|| {
                    cyc_count_with(
                        black_box(g),
                        CountOptions {
                            limit: COUNT_LIMIT,
                            workers,
                        },
                    )
                    .unwrap()
                })
            });
        }
    }
    group.finish();
}

fn estimate(c: &mut Criterion) {
    let mut group = c.benchmark_group("estimate_h");
    group.sample_size(10);
    let small = build_extremal(8, &[9]).unwrap();
    let eg = build_extremal(20, &[7, 7, 7]).unwrap();
    for (name, workers) in modes() {
        group.bench_function(BenchmarkId::new(name, "auto_16v_16k"), |b| {
            b.iter(|| estimate_h(black_box(&small.graph), 0.5, 16_384, 3, Decider::Auto, workers).unwrap())
        });
        group.bench_function(BenchmarkId::new(name, "gn_40v_64k"), |b| {
            b.iter(|| estimate_h(black_box(&eg.graph), 0.5, 65_536, 3, Decider::Gn(&eg), workers).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, count, estimate);
criterion_main!(benches);
