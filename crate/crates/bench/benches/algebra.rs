use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use kingdon_bench::{epsilon_forms, octonions};
use kingdon_core::identities::{alternating_associator_check, diassociativity_check, moufang_check};
use kingdon_core::sampling::{Sampler, DEFAULT_SEED};
use kingdon_core::{build_kingdon, reduce_word, tower, Matrix, Tower, VectorWord};

fn construction(c: &mut Criterion) {
    let forms = epsilon_forms();
    c.bench_function("build all 27 diagonal forms", |b| {
        b.iter(|| {
            for fs in &forms {
                black_box(build_kingdon(fs).unwrap());
            }
        })
    });
    let skew = kingdon_core::FormedSpace::new(Matrix::from_ints(&[[2, 1, 1], [1, 2, 1], [1, 1, 2]])).unwrap();
    c.bench_function("build from a non-diagonal form", |b| b.iter(|| build_kingdon(black_box(&skew)).unwrap()));
    let gammas = Tower::from_ints(&[-1, -1, -1, -1]).unwrap();
    c.bench_function("sedenion tower", |b| b.iter(|| tower(black_box(&gammas)).unwrap()));
}

fn multiplication(c: &mut Criterion) {
    let o = octonions();
    let a = o.algebra().clone();
    let mut s = Sampler::new(DEFAULT_SEED);
    c.bench_function("octonion product of random elements", |b| {
        b.iter_batched(|| (s.element(&a), s.element(&a)), |(x, y)| &x * &y, BatchSize::SmallInput)
    });
    let fs = o.formed_space().clone();
    let mut s = Sampler::new(DEFAULT_SEED);
    let mut leaf = || VectorWord::leaf(s.coeffs(3));
    let word = VectorWord::mul(
        VectorWord::mul(leaf(), VectorWord::mul(leaf(), leaf())),
        VectorWord::mul(leaf(), leaf()),
    );
    c.bench_function("reduce a five-vector word", |b| b.iter(|| reduce_word(black_box(&word), &fs).unwrap()));
}

fn identities(c: &mut Criterion) {
    let o = octonions();
    let a = o.algebra();
    c.bench_function("exhaustive alternativity, octonions", |b| b.iter(|| alternating_associator_check(a)));
    c.bench_function("Moufang, 50 samples", |b| b.iter(|| moufang_check(a, 50, DEFAULT_SEED)));
    c.bench_function("diassociativity, 10 pairs", |b| b.iter(|| diassociativity_check(a, 10, 4, DEFAULT_SEED)));
}

criterion_group!(benches, construction, multiplication, identities);
criterion_main!(benches);
