use borel_bench::{cubics, power_of_maximal, segment};
use borel_core::{
    annihilator_numbers, betti_koszul, betti_oracle, buchberger, gin_sample, pommaret_complete, TermOrder,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn groebner(c: &mut Criterion) {
    let gens = cubics();
    c.bench_function("buchberger_cubics_revlex", |b| b.iter(|| buchberger(black_box(&gens), TermOrder::RevLex).unwrap()));
    c.bench_function("buchberger_cubics_lex", |b| b.iter(|| buchberger(black_box(&gens), TermOrder::Lex).unwrap()));
    let mut g = c.benchmark_group("gin");
    g.sample_size(10);
    g.bench_function("cubics_3_trials", |b| b.iter(|| gin_sample(black_box(&gens), TermOrder::RevLex, 3, 1).unwrap()));
    g.finish();
}

fn hilbert(c: &mut Criterion) {
    let mut g = c.benchmark_group("hilbert_series");
    for d in [3u32, 5, 7] {
        let i = power_of_maximal(4, d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &i, |b, i| b.iter(|| i.hilbert_series()));
    }
    g.finish();
}

fn betti(c: &mut Criterion) {
    let mut g = c.benchmark_group("betti");
    for d in [2u32, 3, 4] {
        let i = segment(4, d);
        g.bench_with_input(BenchmarkId::new("koszul", d), &i, |b, i| b.iter(|| betti_koszul(i, None).unwrap()));
        g.bench_with_input(BenchmarkId::new("oracle", d), &i, |b, i| b.iter(|| betti_oracle(i, 1 << 20).unwrap()));
    }
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let i = segment(4, 3);
    c.bench_function("annihilator_numbers_segment", |b| b.iter(|| annihilator_numbers(black_box(&i)).unwrap()));
    c.bench_function("pommaret_segment", |b| b.iter(|| pommaret_complete(black_box(&i), None).unwrap()));
}

criterion_group!(benches, groebner, hilbert, betti, invariants);
criterion_main!(benches);
