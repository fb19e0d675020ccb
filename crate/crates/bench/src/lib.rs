//! Seeded workloads shared by the benchmarks.

use dedekind_core::{fixtures, BigInt, IntMatrix, OrderElement, OrderPresentation, TwoGenIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Square matrix with entries uniform in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> IntMatrix {
    let data = (0..n * n).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    IntMatrix::new(n, n, data).expect("consistent shape")
}

pub fn random_element(rng: &mut impl Rng, rank: usize, bound: i64) -> OrderElement {
    OrderElement::new((0..rank).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

/// A prime-looking ideal `(p, α)` in `Z[ζ_8]` with coordinates of `α` up to
/// `bound`.
pub fn cyclotomic_ideal(rng: &mut impl Rng, bound: i64) -> (OrderPresentation, TwoGenIdeal) {
    let order = fixtures::cyclotomic8();
    let alpha = random_element(rng, 4, bound);
    let beta = random_element(rng, 4, bound);
    let ideal = TwoGenIdeal::new(alpha, beta).expect("nonzero generators");
    (order, ideal)
}
