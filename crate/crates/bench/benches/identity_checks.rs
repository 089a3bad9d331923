//! Alternating-combinations identity checks vs the full basis-tuple scan,
//! and the scaling of the minimal-degree search.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use starpi_bench::algebra;
use starpi_core::checker::{
    check_standard_combinations, check_standard_full_scan, min_standard_degree_report, Budget,
};
use starpi_core::rat::rat_int;
use starpi_core::Parity;

fn bench_combinations_vs_full_scan(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("identity-check/st");
    for (desc, parity, degree) in [("t:2", Parity::X, 4), ("t:3", Parity::Z, 4), ("s:2", Parity::Z, 4)] {
        let alg = algebra(desc);
        let id = format!("{desc}/{}{degree}", parity.letter());
        group.bench_with_input(BenchmarkId::new("combinations", &id), &degree, |b, _| {
            b.iter(|| {
                black_box(
                    check_standard_combinations(&alg, parity, degree, &rat_int(1), &budget, 1)
                        .unwrap(),
                )
            })
        });
        group.bench_with_input(BenchmarkId::new("full-scan", &id), &degree, |b, _| {
            b.iter(|| black_box(check_standard_full_scan(&alg, parity, degree, &budget, 1).unwrap()))
        });
    }
    group.finish();
}

fn bench_min_degree(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("min-degree");
    group.sample_size(10);
    for (desc, parity, max) in [("t:3", Parity::X, 6), ("t:4", Parity::Z, 8), ("s:4", Parity::Z, 8)] {
        let alg = algebra(desc);
        let id = format!("{desc}/{}", parity.letter());
        group.bench_with_input(BenchmarkId::new("search", &id), &max, |b, _| {
            b.iter(|| {
                black_box(min_standard_degree_report(&alg, parity, max, &budget, 1).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_combinations_vs_full_scan, bench_min_degree);
criterion_main!(benches);
