//! Benchmarks for the recursion oracle and the generating-function query
//! path.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use liemult_core::freudenthal::MultTable;
use liemult_core::lie::AlgebraId;
use liemult_core::multgen::mult_from_gf;

fn recursion_tables(c: &mut Criterion) {
    c.bench_function("recursion_table_g2_8_8", |b| {
        b.iter(|| MultTable::compute(AlgebraId::G2, black_box(8), black_box(8)))
    });
    c.bench_function("recursion_table_c2_16_16", |b| {
        b.iter(|| MultTable::compute(AlgebraId::C2, black_box(16), black_box(16)))
    });
}

fn gf_queries(c: &mut Criterion) {
    // Warm the cached expansion so the benchmark isolates the lookup path.
    mult_from_gf(AlgebraId::A2, 10, 10, 2, 2).unwrap();
    c.bench_function("query_a2_h_coefficient_cached", |b| {
        b.iter(|| mult_from_gf(AlgebraId::A2, black_box(10), black_box(10), 2, 2).unwrap())
    });
}

criterion_group!(benches, recursion_tables, gf_queries);
criterion_main!(benches);
