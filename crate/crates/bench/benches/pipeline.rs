use std::collections::BTreeSet;
use std::hint::black_box;

use amdsl_bench::{corpus_text, synthetic_text, CORPUS};
use amdsl_core::cca::{lower_to_cca, print_cca};
use amdsl_core::codegen::emit_all;
use amdsl_core::compare::compare;
use amdsl_core::frontend::{parse_system, print_system};
use amdsl_core::graph::{emit_graphml, lower_to_graph};
use amdsl_core::semantics::analyze;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn inputs() -> Vec<(String, String)> {
    let mut v: Vec<_> = CORPUS
        .iter()
        .map(|n| (n.to_string(), corpus_text(n)))
        .collect();
    for (spaces, modules) in [(16, 8), (64, 32)] {
        v.push((
            format!("synth_{spaces}x{modules}"),
            synthetic_text(7, spaces, modules),
        ));
    }
    v
}

fn front_end(c: &mut Criterion) {
    let mut g = c.benchmark_group("front_end");
    for (name, text) in inputs() {
        g.throughput(Throughput::Bytes(text.len() as u64));
        g.bench_with_input(BenchmarkId::new("parse", &name), &text, |b, t| {
            b.iter(|| parse_system(black_box(t)))
        });
        let model = parse_system(&text).0.unwrap();
        g.bench_with_input(BenchmarkId::new("print", &name), &model, |b, m| {
            b.iter(|| print_system(black_box(m)))
        });
        g.bench_with_input(BenchmarkId::new("analyze", &name), &model, |b, m| {
            b.iter(|| analyze(black_box(m.clone())))
        });
    }
    g.finish();
}

fn back_end(c: &mut Criterion) {
    let mut g = c.benchmark_group("back_end");
    for (name, text) in inputs() {
        let resolved = analyze(parse_system(&text).0.unwrap()).resolved.unwrap();
        g.bench_with_input(BenchmarkId::new("cca", &name), &resolved, |b, r| {
            b.iter(|| print_cca(&lower_to_cca(black_box(r))))
        });
        g.bench_with_input(BenchmarkId::new("graphml", &name), &resolved, |b, r| {
            b.iter(|| emit_graphml(&lower_to_graph(black_box(r)), false))
        });
        let ir = lower_to_cca(&resolved);
        g.bench_with_input(BenchmarkId::new("codegen", &name), &ir, |b, ir| {
            b.iter(|| emit_all(black_box(ir), &BTreeSet::new()))
        });
    }
    g.finish();
}

fn comparison(c: &mut Criterion) {
    let a = parse_system(&synthetic_text(1, 64, 32)).0.unwrap();
    let b = parse_system(&synthetic_text(2, 64, 32)).0.unwrap();
    c.bench_function("compare/synth_64x32", |bench| {
        bench.iter(|| compare(black_box(&a), black_box(&b)))
    });
}

criterion_group!(benches, front_end, back_end, comparison);
criterion_main!(benches);
