use criterion::{criterion_group, criterion_main, Criterion};
use holflag_core::rootsys::Character;
use holflag_core::*;
use std::hint::black_box;

fn ty(f: Family, n: usize) -> SimpleType {
    SimpleType::new(f, n).unwrap()
}

fn root_systems(c: &mut Criterion) {
    c.bench_function("build E8", |b| {
        b.iter(|| build_root_system(black_box(ty(Family::E, 8))))
    });
}

fn sweeps(c: &mut Criterion) {
    let f4 = build_root_system(ty(Family::F, 4));
    let c6 = build_root_system(ty(Family::C, 6));
    c.bench_function("sweep F4", |b| b.iter(|| sweep_exceptions(black_box(&f4))));
    c.bench_function("sweep C6", |b| b.iter(|| sweep_exceptions(black_box(&c6))));
}

fn characters(c: &mut Criterion) {
    let e8 = build_root_system(ty(Family::E, 8));
    let rho = Weight::rho(8).scale(5);
    c.bench_function("weyl_dim E8 5rho", |b| {
        b.iter(|| weyl_dim(&e8, black_box(&rho)).unwrap())
    });
    let b3 = build_root_system(ty(Family::B, 3));
    let hw = Weight::new(vec![2, 2, 2]);
    c.bench_function("freudenthal B3 (2,2,2)", |b| {
        b.iter(|| Character::new(&b3, black_box(&hw)).unwrap())
    });
}

criterion_group!(benches, root_systems, sweeps, characters);
criterion_main!(benches);
