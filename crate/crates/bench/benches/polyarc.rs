use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polyarc_core::babylon::{heron_sequence, ApproximationContext};
use polyarc_core::geometry::{metrics, oracle_area, ContextEval, ExactEval, PolyarcSpec};
use polyarc_core::render::{render, FigureId, RenderRequest, Subject};
use polyarc_core::tablet::{default_table3_candidates, table3_search, verify_all};
use polyarc_core::{Precision, Rational, RoundingMode, Sexagesimal};

fn sexagesimal(c: &mut Criterion) {
    let q = Rational::frac(14720113, 3212192);
    let mut g = c.benchmark_group("sexagesimal");
    for places in [5, 20, 64] {
        g.bench_with_input(BenchmarkId::new("from_rational", places), &places, |b, &p| {
            b.iter(|| Sexagesimal::from_rational(black_box(&q), p, RoundingMode::Truncate).unwrap())
        });
    }
    let s: Sexagesimal = "0;17,17,12,44,20,29,36,54".parse().unwrap();
    g.bench_function("to_rational", |b| b.iter(|| black_box(&s).to_rational()));
    g.finish();
}

fn heron(c: &mut Criterion) {
    let n = Rational::integer(21);
    let seed = Rational::integer(4);
    let mut g = c.benchmark_group("heron");
    // the iterates' digit counts double every step
    for steps in [3, 6, 9] {
        g.bench_with_input(BenchmarkId::from_parameter(steps), &steps, |b, &k| {
            b.iter(|| heron_sequence(black_box(&n), &seed, k).unwrap())
        });
    }
    g.finish();
}

fn figure_metrics(c: &mut Criterion) {
    let spec = PolyarcSpec::convex6(Rational::one()).unwrap();
    let mut g = c.benchmark_group("metrics/convex-6");
    for digits in [30, 100, 300] {
        let e = ExactEval::new(Precision::new(digits).unwrap());
        g.bench_with_input(BenchmarkId::new("exact", digits), &e, |b, e| {
            b.iter(|| metrics(e, black_box(&spec)).unwrap())
        });
    }
    let ctx = ApproximationContext::standard_sqrt21();
    let e = ContextEval::new(&ctx);
    g.bench_function("context", |b| b.iter(|| metrics(&e, black_box(&spec)).unwrap()));
    g.finish();

    c.bench_function("verify_all", |b| b.iter(|| verify_all(Precision::DEFAULT).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let spec = PolyarcSpec::apusamikkum3(Rational::one()).unwrap();
    let mut g = c.benchmark_group("oracle");
    for k in [512, 4096] {
        g.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| oracle_area(black_box(&spec), k).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let (s3, s21) = default_table3_candidates();
    c.bench_function("table3_search", |b| b.iter(|| table3_search(black_box(&s3), &s21).unwrap()));
}

fn svg(c: &mut Criterion) {
    let mut g = c.benchmark_group("render");
    for (name, subject) in [
        ("sb23397", Subject::Sb23397),
        ("regular-polyarcs", Subject::Figure(FigureId::RegularPolyarcs)),
    ] {
        let mut req = RenderRequest::new(subject);
        req.show_guides = true;
        g.bench_function(name, |b| b.iter(|| render(black_box(&req)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, sexagesimal, heron, figure_metrics, oracle, search, svg);
criterion_main!(benches);
