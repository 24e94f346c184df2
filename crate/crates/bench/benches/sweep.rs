use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use thetadim::closed_form::table_fidelity;
use thetadim::sweep::{sweep, SweepOptions};
use thetadim_bench::all_triples;

fn full_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for max_n in [10, 13, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(max_n), &max_n, |b, &max_n| {
            b.iter(|| black_box(sweep(&SweepOptions::up_to(max_n)).unwrap()))
        });
    }
    group.finish();
}

fn fidelity(c: &mut Criterion) {
    let triples = all_triples(12);
    c.bench_function("table_fidelity/n<=12", |b| {
        b.iter(|| {
            triples
                .iter()
                .map(|&t| table_fidelity(t).len())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, full_sweep, fidelity);
criterion_main!(benches);
