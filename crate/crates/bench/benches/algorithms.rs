use criterion::{black_box, criterion_group, criterion_main, Criterion};
use raag_bench::{churn_word, named};
use raag_core::{
    classify, find_3conn_bundle, find_minor, find_nested, find_proper, isomorphism_classes,
    Property, Raag, Route,
};

fn words(c: &mut Criterion) {
    let raag = Raag::new(named("C6"));
    let w = churn_word(6, 200);
    c.bench_function("normalize C6 len 200", |b| {
        b.iter(|| raag.normalize(black_box(&w)).unwrap())
    });
    let x = churn_word(6, 12);
    c.bench_function("centralizer C6 len 12", |b| {
        b.iter(|| raag.centralizer_ear(black_box(&x)).unwrap())
    });
}

fn decompositions(c: &mut Criterion) {
    let p = named("petersen");
    c.bench_function("proper petersen", |b| {
        b.iter(|| find_proper(black_box(&p)).unwrap())
    });
    let w = named("W6");
    c.bench_function("nested W6 (absent)", |b| {
        b.iter(|| find_nested(black_box(&w)).unwrap())
    });
    let k = named("K5");
    c.bench_function("3conn bundle K5", |b| {
        b.iter(|| find_3conn_bundle(black_box(&k)).unwrap())
    });
}

fn minors(c: &mut Criterion) {
    let (p, k5) = (named("petersen"), named("K5"));
    c.bench_function("K5 minor in petersen", |b| {
        b.iter(|| find_minor(black_box(&p), &k5).unwrap())
    });
    c.bench_function("planarity both routes petersen", |b| {
        b.iter(|| classify(black_box(&p), Property::Planar, Route::Both).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    g.bench_function("classes n=6", |b| {
        b.iter(|| isomorphism_classes(black_box(6)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, words, decompositions, minors, enumeration);
criterion_main!(benches);
