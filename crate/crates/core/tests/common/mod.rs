//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use dedekind_core::{
    fixtures, linalg::det_modular, order::norm_multiple, BigInt, IntMatrix, OrderElement, OrderPresentation,
    TwoGenIdeal,
};
use rand::Rng;

/// The six rings of integers used throughout (everything except `Z`).
pub fn rings() -> Vec<(&'static str, OrderPresentation)> {
    fixtures::all().into_iter().filter(|(name, _)| *name != "integers").collect()
}

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn element(rng: &mut impl Rng, rank: usize, bound: i64) -> OrderElement {
    OrderElement::new((0..rank).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

pub fn nonzero_element(rng: &mut impl Rng, rank: usize, bound: i64) -> OrderElement {
    loop {
        let x = element(rng, rank, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random nonzero ideal with small generators, drawn from three shapes:
/// `(a, β)` for a rational integer `a`, `(N(y), y·z)` which lies inside
/// `(y)` and so is rarely the unit ideal, and two random elements.
pub fn ideal(rng: &mut impl Rng, order: &OrderPresentation, bound: i64) -> TwoGenIdeal {
    let n = order.rank();
    match rng.gen_range(0..10) {
        0..=3 => {
            let a = order.scalar(&BigInt::from(rng.gen_range(1..=bound)));
            TwoGenIdeal::new(a, element(rng, n, bound)).unwrap()
        }
        4..=7 => {
            let y = nonzero_element(rng, n, bound.clamp(1, 3));
            let z = element(rng, n, bound);
            let norm = order.element_norm(&y).unwrap();
            let yz = order.mul(&y, &z).unwrap();
            TwoGenIdeal::new(order.scalar(&norm), yz).unwrap()
        }
        _ => TwoGenIdeal::new(nonzero_element(rng, n, bound), element(rng, n, bound)).unwrap(),
    }
}

/// An ideal with `1 <= N(I) <= max_norm`, by rejection.
pub fn ideal_with_norm_at_most(rng: &mut impl Rng, order: &OrderPresentation, max_norm: u64) -> (TwoGenIdeal, BigInt) {
    let n = order.rank() as u32;
    // a^n bounds the norm of (a, β); keep a near max_norm^(1/n)
    let a_max = ((max_norm as f64).powf(1.0 / n as f64).floor() as i64).max(2) + 1;
    loop {
        let i = ideal(rng, order, a_max);
        let h = norm_multiple(order, &i).unwrap();
        let basis = dedekind_core::ideal_hnf_basis(order, &i, &h).unwrap();
        if basis.norm <= BigInt::from(max_norm) {
            return (i, basis.norm);
        }
    }
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows * cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

pub fn nonsingular(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    loop {
        let m = matrix(rng, n, n, bound);
        if det_modular(&m).unwrap() != BigInt::from(0) {
            return m;
        }
    }
}

/// Full row rank `n x m` matrix.
pub fn full_row_rank(rng: &mut impl Rng, n: usize, m: usize, bound: i64) -> IntMatrix {
    loop {
        let a = matrix(rng, n, m, bound);
        if a.rank() == n {
            return a;
        }
    }
}

/// Product of random elementary column operations; unimodular by
/// construction.
pub fn unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let f = BigInt::from(rng.gen_range(-3..=3));
                for r in 0..n {
                    let v = &u[(r, j)] * &f;
                    u[(r, i)] += v;
                }
            }
            1 => {
                for r in 0..n {
                    u[(r, i)] = -u[(r, i)].clone();
                }
            }
            _ => {
                for r in 0..n {
                    let t = u[(r, i)].clone();
                    u[(r, i)] = u[(r, j)].clone();
                    u[(r, j)] = t;
                }
            }
        }
    }
    u
}
