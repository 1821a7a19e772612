//! Sequential against rayon-parallel execution on the hot paths.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use samerep::repfn::{first_mismatch_with, repfn_table_with};
use samerep::sets::{evil_prefix, odious_prefix};
use samerep::verifier::{classify_theorem3_with, classify_theorem6_with, corollary1_sweep_with};
use samerep::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn repfn(c: &mut Criterion) {
    let mut group = c.benchmark_group("repfn_table");
    for n in [1 << 14, 1 << 17] {
        let a = evil_prefix(n);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &a, |b, a| {
                b.iter(|| repfn_table_with(black_box(a), n, exec))
            });
        }
    }
    group.finish();
}

fn mismatch(c: &mut Criterion) {
    let mut group = c.benchmark_group("first_mismatch");
    let n = 1 << 16;
    let (a, b) = (evil_prefix(n), odious_prefix(n));
    for (name, exec) in MODES {
        group.bench_function(name, |bench| {
            bench.iter(|| first_mismatch_with(black_box(&a), &b, 2 * n, exec))
        });
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("thm3", name), |b| {
            b.iter(|| classify_theorem3_with(1024, exec))
        });
        group.bench_function(BenchmarkId::new("thm6", name), |b| {
            b.iter(|| classify_theorem6_with(200, exec, true))
        });
        group.bench_function(BenchmarkId::new("cor1", name), |b| {
            b.iter(|| corollary1_sweep_with(2048, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, repfn, mismatch, sweeps);
criterion_main!(benches);
