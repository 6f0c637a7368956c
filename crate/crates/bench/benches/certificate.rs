use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gdgap_bench::{example1_config, example2_config, sample_configs};
use gdgap_core::certificate::certificate;
use gdgap_core::fuzz::check_invariants;
use gdgap_core::metrics::{gd_verdict, metrics};
use gdgap_core::tetra::construct;

fn pipeline(c: &mut Criterion) {
    let ex1 = example1_config();
    let ex2 = example2_config();
    c.bench_function("construct + verdict, example 1", |b| {
        b.iter(|| gd_verdict(&metrics(&construct(black_box(&ex1)).unwrap()).unwrap()))
    });
    c.bench_function("construct + verdict, example 2 (quadratic field)", |b| {
        b.iter(|| gd_verdict(&metrics(&construct(black_box(&ex2)).unwrap()).unwrap()))
    });
}

fn certificates(c: &mut Criterion) {
    let ex1 = example1_config();
    c.bench_function("certificate, example 1", |b| b.iter(|| certificate(black_box(&ex1)).unwrap()));
    let configs = sample_configs(16, 7);
    c.bench_function("invariant suite, 16 random configs", |b| {
        b.iter(|| configs.iter().map(|cfg| check_invariants(black_box(cfg)).len()).sum::<usize>())
    });
}

criterion_group!(benches, pipeline, certificates);
criterion_main!(benches);
