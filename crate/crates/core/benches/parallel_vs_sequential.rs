//! One worker against all cores on the main data-parallel workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ndl_core::constructions::paley;
use ndl_core::counting::{hom_count_cycle, injective_count_cycle};
use ndl_core::exec::with_threads;
use ndl_core::experiments::{colouring_trials, corpus_up_to, oracle_patterns, oracle_rows};
use ndl_core::spectral::certify_ndl;
use std::hint::black_box;

const POOLS: [(&str, Option<usize>); 2] = [("1-thread", Some(1)), ("all-cores", None)];

fn counting(c: &mut Criterion) {
    let g = paley(101).unwrap();
    let small = paley(37).unwrap();
    let mut group = c.benchmark_group("counting");
    group.sample_size(10);
    for (name, threads) in POOLS {
        group.bench_with_input(
            BenchmarkId::new("labelled C5 in paley37", name),
            &threads,
            |b, &t| {
                b.iter(|| with_threads(t, || injective_count_cycle(black_box(&small), 5).unwrap()))
            },
        );
        group.bench_with_input(
            BenchmarkId::new("hom C9 in paley101", name),
            &threads,
            |b, &t| b.iter(|| with_threads(t, || hom_count_cycle(black_box(&g), 9))),
        );
    }
    group.finish();
}

fn trials(c: &mut Criterion) {
    let g = paley(101).unwrap();
    let cert = certify_ndl(&g).unwrap();
    let mut group = c.benchmark_group("trials");
    group.sample_size(10);
    for (name, threads) in POOLS {
        group.bench_with_input(
            BenchmarkId::new("20 colourings of paley101", name),
            &threads,
            |b, &t| {
                b.iter(|| with_threads(t, || colouring_trials(&g, &cert, 1, 0.5, 20, 1).unwrap()))
            },
        );
    }
    group.finish();
}

fn brute(c: &mut Criterion) {
    let entries = corpus_up_to(10);
    let patterns = oracle_patterns();
    let mut group = c.benchmark_group("brute");
    group.sample_size(10);
    for (name, threads) in POOLS {
        group.bench_with_input(
            BenchmarkId::new("oracle corpus", name),
            &threads,
            |b, &t| b.iter(|| with_threads(t, || oracle_rows(&entries, &patterns).unwrap())),
        );
    }
    group.finish();
}

criterion_group!(benches, counting, trials, brute);
criterion_main!(benches);
