use std::hint::black_box;

use brace_forge::algebra::enumerate_algebra_rb;
use brace_forge::brace::{enumerate_braces, verify_brace};
use brace_forge::embedding::verify_embedding;
use brace_forge::group::automorphisms;
use brace_forge::rota_baxter::enumerate_rb_operators;
use brace_forge::ybe::{solution_from_brace, verify_solution};
use brace_forge::Bounds;
use brace_forge_bench::{brace, group};
use criterion::{criterion_group, criterion_main, Criterion};

fn enumeration(c: &mut Criterion) {
    let bounds = Bounds::default();
    let mut g = c.benchmark_group("rb_enumeration");
    for name in ["S3", "D4", "Q8", "A4"] {
        let grp = group(name);
        g.bench_function(name, |b| b.iter(|| enumerate_rb_operators(black_box(&grp), &bounds).unwrap()));
    }
    g.finish();

    c.bench_function("algebra_rb_n3", |b| b.iter(|| enumerate_algebra_rb(black_box(3)).unwrap()));

    let s4 = group("S4");
    c.bench_function("automorphisms_S4", |b| b.iter(|| automorphisms(black_box(&s4), 24).unwrap()));
}

fn braces(c: &mut Criterion) {
    let bounds = Bounds::default();
    let mut g = c.benchmark_group("regular_subgroups");
    g.sample_size(10);
    for name in ["S3", "C2xC4", "D4"] {
        let grp = group(name);
        g.bench_function(name, |b| b.iter(|| enumerate_braces(black_box(&grp), &bounds).unwrap()));
    }
    g.finish();

    let br = brace("A4");
    c.bench_function("verify_brace_A4", |b| b.iter(|| verify_brace(black_box(br.add()), br.circ())));
    c.bench_function("verify_embedding_D4", |b| {
        let d4 = brace("D4");
        b.iter(|| verify_embedding(black_box(&d4), &bounds).unwrap())
    });
}

fn braid(c: &mut Criterion) {
    let mut g = c.benchmark_group("braid_check");
    for name in ["S3", "Q8", "C12", "D6"] {
        let s = solution_from_brace(&brace(name)).unwrap();
        g.bench_function(name, |b| b.iter(|| verify_solution(black_box(&s))));
    }
    g.finish();
}

criterion_group!(benches, enumeration, braces, braid);
criterion_main!(benches);
