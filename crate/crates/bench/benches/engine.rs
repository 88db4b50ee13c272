use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use comply_core::arith::{self, ArithOptions};
use comply_core::{build_table, detect_period, ConstraintSide, EngineConfig, RuleSet};

fn tables(c: &mut Criterion) {
    let cfg = EngineConfig::default();
    let mut group = c.benchmark_group("build_table");
    for k in [2u64, 5, 30] {
        let rules = RuleSet::consecutive(k).unwrap();
        group.bench_with_input(BenchmarkId::new("consecutive", k), &rules, |b, rules| {
            b.iter(|| build_table(black_box(rules), 3000, &cfg).unwrap())
        });
    }
    let rules = RuleSet::finite_arithmetic(8, 13, 3).unwrap();
    group.bench_function("arith_8_13_3_10p", |b| {
        b.iter(|| build_table(black_box(&rules), 550, &cfg).unwrap())
    });
    group.finish();
}

fn analysis(c: &mut Criterion) {
    let cfg = EngineConfig::default();
    let t = build_table(&RuleSet::finite_arithmetic(8, 13, 3).unwrap(), 5500, &cfg).unwrap();
    c.bench_function("detect_period/5501", |b| {
        b.iter(|| detect_period(black_box(t.row(ConstraintSide::Base)), 3).unwrap())
    });
    let opts = ArithOptions::default();
    c.bench_function("verify_arith/8_13_3", |b| {
        b.iter(|| arith::verify_arith(8, 13, 3, black_box(550), &opts).unwrap())
    });
}

criterion_group!(benches, tables, analysis);
criterion_main!(benches);
