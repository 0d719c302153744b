//! Timings for the hot paths: semigroup construction, the invariant report,
//! the root search, idealization, enumeration and a small suite run.

use std::hint::black_box;

use cdeg::corpus::{run_suite, SuiteConfig};
use cdeg::families::{family_generators, Family};
use cdeg::idealization::idealization_invariants;
use cdeg::invariants::report;
use cdeg::roots::{rootset, DEFAULT_SEARCH_CAP};
use cdeg::semigroup::{count_by_genus, DEFAULT_GENUS_CAP};
use cdeg::NumericalSemigroup;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn samples() -> Vec<(String, Vec<u64>)> {
    let mut out = vec![("<4,5,6,7>".to_string(), vec![4, 5, 6, 7])];
    for e in [6, 10] {
        out.push((
            format!("e-family {e}"),
            family_generators(Family::EFamily, e).unwrap(),
        ));
    }
    out.push((
        "maxgen 8".into(),
        family_generators(Family::Maxgen, 8).unwrap(),
    ));
    out
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("semigroup");
    for (name, gens) in samples() {
        g.bench_with_input(BenchmarkId::from_parameter(&name), &gens, |b, gens| {
            b.iter(|| NumericalSemigroup::new(black_box(gens)).unwrap())
        });
    }
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("report");
    for (name, gens) in samples() {
        let s = NumericalSemigroup::new(&gens).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(&name), &s, |b, s| {
            b.iter(|| report(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("rootset");
    for (name, gens) in samples() {
        let s = NumericalSemigroup::new(&gens).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(&name), &s, |b, s| {
            b.iter(|| rootset(black_box(s), DEFAULT_SEARCH_CAP).unwrap())
        });
    }
    g.finish();
}

fn idealization(c: &mut Criterion) {
    let mut g = c.benchmark_group("idealization");
    for (name, gens) in samples() {
        let s = NumericalSemigroup::new(&gens).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(&name), &s, |b, s| {
            b.iter(|| idealization_invariants(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn corpus(c: &mut Criterion) {
    let mut g = c.benchmark_group("corpus");
    g.sample_size(10);
    g.bench_function("enumerate genus 14", |b| {
        b.iter(|| count_by_genus(black_box(14), DEFAULT_GENUS_CAP).unwrap())
    });
    g.bench_function("suite genus 8", |b| {
        b.iter(|| {
            run_suite(&SuiteConfig {
                workers: 1,
                ..SuiteConfig::new(8)
            })
            .unwrap()
        })
    });
    g.finish();
}

criterion_group!(
    benches,
    construction,
    invariants,
    roots,
    idealization,
    corpus
);
criterion_main!(benches);
