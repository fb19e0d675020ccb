use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedekind_bench::{random_matrix, rng};
use dedekind_core::linalg::{det_modular, hnf_modular, snf_with_transforms};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("det_modular");
    group.sample_size(10);
    for n in [10usize, 25, 50] {
        let a = random_matrix(&mut rng(n as u64), n, i64::from(i32::MAX));
        group
            .bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| det_modular(black_box(a)).unwrap()));
    }
    group.finish();
}

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_forms");
    for n in [4usize, 8] {
        let mut r = rng(100 + n as u64);
        let a = loop {
            let a = random_matrix(&mut r, n, 1000);
            if det_modular(&a).unwrap() != 0.into() {
                break a;
            }
        };
        let d = det_modular(&a).unwrap().magnitude().clone().into();
        group.bench_with_input(BenchmarkId::new("hnf_modular", n), &a, |b, a| {
            b.iter(|| hnf_modular(black_box(a), &d).unwrap())
        });
        let h = hnf_modular(&a, &d).unwrap();
        group.bench_with_input(BenchmarkId::new("snf", n), &h, |b, h| {
            b.iter(|| snf_with_transforms(black_box(h), &d).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, determinants, normal_forms);
criterion_main!(benches);
