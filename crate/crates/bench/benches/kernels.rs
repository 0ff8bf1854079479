use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gsym_bench::{root_cases, TABLE_SIZES};
use gsym_core::bisnomial::{check_conversion, q_bisnomial_row, Conversion};
use gsym_core::combinatorics::{weight_sum, Model, Object};
use gsym_core::identities::{verify_with, Params, Tables};
use gsym_core::symfun::{complete_by_series, elementary_by_peeling, m_lambda_at_roots, GenTable};

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("tables");
    for &(n, s, kmax) in TABLE_SIZES {
        let id = format!("n{n}_s{s}_k{kmax}");
        group.bench_with_input(BenchmarkId::new("elementary_by_peeling", &id), &(n, s, kmax), |b, &(n, s, k)| {
            b.iter(|| elementary_by_peeling(black_box(n), s, k))
        });
        group.bench_with_input(BenchmarkId::new("complete_by_series", &id), &(n, s, kmax), |b, &(n, s, k)| {
            b.iter(|| complete_by_series(black_box(n), s, k))
        });
        group.bench_with_input(BenchmarkId::new("gen_table", &id), &(n, s, kmax), |b, &(n, s, k)| {
            b.iter(|| GenTable::new(black_box(n), s, k))
        });
    }
    group.finish();
}

fn roots(c: &mut Criterion) {
    let cases = root_cases();
    c.bench_function("m_lambda_at_roots", |b| {
        b.iter(|| {
            for (lambda, s) in &cases {
                black_box(m_lambda_at_roots(lambda, *s));
            }
        })
    });
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    for id in ["newton_E", "inv_H", "roots_H", "powsub_h"] {
        group.bench_function(id, |b| {
            b.iter_batched(
                Tables::new,
                |t| verify_with(&t, id, &Params::nks(3, 6, 3)).unwrap(),
                criterion::BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn models(c: &mut Criterion) {
    c.bench_function("weight_sum_H_n4_k7_s3", |b| {
        b.iter(|| weight_sum(black_box(4), 7, 3, Model::H, Object::Paths))
    });
    c.bench_function("q_bisnomial_row_n8_s3", |b| b.iter(|| q_bisnomial_row(black_box(8), 3)));
    c.bench_function("conversion_pq_n5_k8_s3", |b| {
        b.iter(|| check_conversion(Conversion::Pq, black_box(5), 8, 3).unwrap())
    });
}

criterion_group!(benches, tables, roots, identities, models);
criterion_main!(benches);
