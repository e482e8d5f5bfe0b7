//! Benchmarks for the hot paths: lattice enumeration, permutability
//! classification, radical computation and Magnus-order comparisons.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use permuta_core::algebra::GroupAlgebra;
use permuta_core::analysis::permutable_implies_normal;
use permuta_core::corpus;
use permuta_core::fq::Fq;
use permuta_core::gl::generate_gl;
use permuta_core::lattice::all_subgroups;
use permuta_core::magnus::{magnus_compare, magnus_expand, parse_word};
use permuta_core::radical::radical_space;

fn bench_lattice(c: &mut Criterion) {
    let s4 = corpus::symmetric_group(4).unwrap();
    let gl23 = generate_gl(2, 3, 10_000).unwrap();
    let gl32 = generate_gl(3, 2, 10_000).unwrap();
    let mut group = c.benchmark_group("lattice");
    group.sample_size(20);
    group.bench_function("all_subgroups S(4)", |b| {
        b.iter(|| all_subgroups(black_box(&s4), 500).unwrap())
    });
    group.bench_function("all_subgroups GL(2,3)", |b| {
        b.iter(|| all_subgroups(black_box(&gl23), 500).unwrap())
    });
    group.sample_size(10);
    group.bench_function("all_subgroups GL(3,2)", |b| {
        b.iter(|| all_subgroups(black_box(&gl32), 500).unwrap())
    });
    group.finish();
}

fn bench_classification(c: &mut Criterion) {
    let gl23 = generate_gl(2, 3, 10_000).unwrap();
    let m16 = corpus::modular_group_16().unwrap();
    let mut group = c.benchmark_group("classification");
    group.sample_size(20);
    group.bench_function("permutable_implies_normal GL(2,3)", |b| {
        b.iter(|| permutable_implies_normal("GL(2,3)", black_box(&gl23), 500).unwrap())
    });
    group.bench_function("permutable_implies_normal M16", |b| {
        b.iter(|| permutable_implies_normal("M16", black_box(&m16), 500).unwrap())
    });
    group.finish();
}

fn bench_radical(c: &mut Criterion) {
    let d4 = corpus::dihedral_group(4).unwrap();
    let s3 = corpus::symmetric_group(3).unwrap();
    let m16 = corpus::modular_group_16().unwrap();
    let ga_d4 = GroupAlgebra::new(&d4, Fq::new(2).unwrap()).unwrap();
    let ga_s3 = GroupAlgebra::new(&s3, Fq::new(3).unwrap()).unwrap();
    let ga_m16 = GroupAlgebra::new(&m16, Fq::new(2).unwrap()).unwrap();
    let mut group = c.benchmark_group("radical");
    group.bench_function("radical GF(2)[D(4)]", |b| {
        b.iter(|| radical_space(black_box(ga_d4.dense_form())))
    });
    group.bench_function("radical GF(3)[S(3)]", |b| {
        b.iter(|| radical_space(black_box(ga_s3.dense_form())))
    });
    group.bench_function("radical GF(2)[M16]", |b| {
        b.iter(|| radical_space(black_box(ga_m16.dense_form())))
    });
    group.finish();
}

fn bench_magnus(c: &mut Criterion) {
    let commutator = parse_word("x1 x2 x1^-1 x2^-1", Some(3)).unwrap();
    let long = parse_word("x1^2 x3^-1 x2 x1^-1", Some(3)).unwrap();
    let close = parse_word("x1 x2 x1^-1", Some(3)).unwrap();
    let mut group = c.benchmark_group("magnus");
    group.bench_function("expand commutator deg 7", |b| {
        b.iter(|| magnus_expand(black_box(&commutator), 7).unwrap())
    });
    group.bench_function("compare distant pair", |b| {
        b.iter(|| magnus_compare(black_box(&long), black_box(&commutator)).unwrap())
    });
    group.bench_function("compare close pair", |b| {
        b.iter(|| magnus_compare(black_box(&close), black_box(&commutator)).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_lattice,
    bench_classification,
    bench_radical,
    bench_magnus
);
criterion_main!(benches);
