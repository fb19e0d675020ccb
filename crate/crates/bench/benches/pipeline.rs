use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedekind_bench::{cyclotomic_ideal, rng};
use dedekind_core::{fixtures, is_prime_ideal, is_prime_ideal_power, OrderElement, TwoGenIdeal};

fn cyclotomic(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_prime_cyclotomic8");
    group.sample_size(10);
    for bound in [100i64, 10_000, 1_000_000] {
        let (order, ideal) = cyclotomic_ideal(&mut rng(bound as u64), bound);
        group.bench_with_input(BenchmarkId::from_parameter(bound), &ideal, |b, ideal| {
            b.iter(|| is_prime_ideal(&order, black_box(ideal), None).unwrap())
        });
    }
    group.finish();
}

fn rational_primes(c: &mut Criterion) {
    let mut group = c.benchmark_group("prime_power_of_rational_prime");
    for (name, order) in fixtures::all() {
        let n = order.rank();
        let p = order.scalar(&101.into());
        let ideal = TwoGenIdeal::new(p.clone(), OrderElement::new(p.coords)).unwrap();
        group.bench_function(BenchmarkId::new(name, n), |b| {
            b.iter(|| is_prime_ideal_power(&order, black_box(&ideal), None).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, cyclotomic, rational_primes);
criterion_main!(benches);
