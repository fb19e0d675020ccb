mod common;

use dedekind_core::linalg::{
    det_modular, elementary_divisors_modular, hadamard_bound, hnf_modular, hnf_with_transform, inverse_mod,
    is_hermite_form, snf_with_transforms,
};
use dedekind_core::oracle::{bareiss_det, lattice_points_in_box, triangular_lattice_contains};
use dedekind_core::{fixtures, BigInt, IntMatrix, OrderElement};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn square(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-bound..=bound, n * n)
            .prop_map(move |v| IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn det_matches_bareiss(a in square(6, 1000)) {
        prop_assert_eq!(det_modular(&a).unwrap(), bareiss_det(&a).unwrap());
    }

    #[test]
    fn hadamard_bounds_det(a in square(6, 1000)) {
        prop_assert!(det_modular(&a).unwrap().abs() <= hadamard_bound(&a).unwrap());
    }

    #[test]
    fn hnf_routes_agree(seed in any::<u64>(), n in 1usize..=5, extra in 0usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::full_row_rank(&mut rng, n, n + extra, 50);
        // any nonzero maximal minor is a multiple of the lattice determinant
        let det = maximal_minor(&a);
        let h = &det * BigInt::from(seed % 5 + 1);
        let exact = hnf_with_transform(&a, &h).unwrap();
        prop_assert!(exact.verify(&a));
        prop_assert!(is_hermite_form(&exact.h));
        prop_assert_eq!(&hnf_modular(&a, &h).unwrap(), &exact.h);
    }

    #[test]
    fn hnf_is_invariant_under_unimodular_columns(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::nonsingular(&mut rng, n, 30);
        let d = det_modular(&a).unwrap().abs();
        let u = common::unimodular(&mut rng, n, 12);
        let au = &a * &u;
        prop_assert_eq!(hnf_modular(&a, &d).unwrap(), hnf_modular(&au, &d).unwrap());
    }

    #[test]
    fn snf_contracts(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = common::nonsingular(&mut rng, n, 1000);
        let d = det_modular(&b).unwrap().abs();
        let r = snf_with_transforms(&b, &d).unwrap();
        prop_assert!(r.verify(&b));
        let divisors = r.divisors();
        prop_assert_eq!(divisors.iter().product::<BigInt>(), d.clone());
        for w in divisors.windows(2) {
            prop_assert!((&w[0] % &w[1]).is_zero());
        }
        prop_assert_eq!(elementary_divisors_modular(&b, &d).unwrap(), divisors);
        prop_assert_eq!(det_modular(&r.u).unwrap().abs(), BigInt::one());
        prop_assert_eq!(det_modular(&r.v).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn inverse_mod_of_unimodular(seed in any::<u64>(), n in 1usize..=5, h in 2i64..=1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = common::unimodular(&mut rng, n, 15);
        let h = BigInt::from(h);
        let w = inverse_mod(&v, &h).unwrap();
        prop_assert_eq!((&v * &w).mod_floor(&h), IntMatrix::identity(n));
        prop_assert!(w.entries().iter().all(|x| !x.is_negative() && x < &h));
    }
}

/// Absolute value of the first nonzero maximal minor.
fn maximal_minor(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    let m = a.cols();
    let mut cols: Vec<usize> = (0..n).collect();
    loop {
        let sub = IntMatrix::from_columns(&cols.iter().map(|&c| a.column(c)).collect::<Vec<_>>()).unwrap();
        let d = bareiss_det(&sub).unwrap().abs();
        if !d.is_zero() {
            return d;
        }
        // next combination
        let mut i = n;
        loop {
            i -= 1;
            if cols[i] < m - n + i {
                cols[i] += 1;
                for j in i + 1..n {
                    cols[j] = cols[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[test]
fn hnf_examples_generate_the_same_lattice() {
    // columns of [[1,-1],[1,1]] span {(a, b) : a + b even}
    let a = IntMatrix::from_rows([[1, -1], [1, 1]]).unwrap();
    let h = hnf_modular(&a, &BigInt::from(2)).unwrap();
    assert_eq!(h, IntMatrix::from_rows([[2, 1], [0, 1]]).unwrap());
    for p in lattice_points_in_box(&a, 4) {
        assert!(triangular_lattice_contains(&h, &p));
    }
    // and every point of the even-sum lattice in a box is in L(H)
    for x in -6i64..=6 {
        for y in -6i64..=6 {
            let inside = (x + y) % 2 == 0;
            assert_eq!(triangular_lattice_contains(&h, &[BigInt::from(x), BigInt::from(y)]), inside);
        }
    }
}

#[test]
fn ideal_block_example() {
    // (H_A | H_B) for α = 1 + i, β = 2 in Z[i]
    let z_i = fixtures::gaussian();
    let ha = hnf_modular(
        &z_i.regular_representation(&OrderElement::from_i64(&[1, 1])).unwrap().transpose(),
        &BigInt::from(2),
    )
    .unwrap();
    let hb = hnf_modular(
        &z_i.regular_representation(&OrderElement::from_i64(&[2, 0])).unwrap().transpose(),
        &BigInt::from(4),
    )
    .unwrap();
    let m = ha.hstack(&hb).unwrap();
    let h = hnf_with_transform(&m, &BigInt::from(8)).unwrap();
    assert!(h.verify(&m));
    assert_eq!(h.h, IntMatrix::from_rows([[2, 1], [0, 1]]).unwrap());
    for p in lattice_points_in_box(&m, 2) {
        assert!(triangular_lattice_contains(&h.h, &p));
    }
}

#[test]
fn five_by_five_det_example() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let a = common::matrix(&mut rng, 5, 5, 10);
        assert_eq!(det_modular(&a).unwrap(), bareiss_det(&a).unwrap());
    }
}

#[test]
fn inverse_mod_100_of_elementary_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let h = BigInt::from(100);
    for _ in 0..20 {
        let v = common::unimodular(&mut rng, 4, 20);
        let w = inverse_mod(&v, &h).unwrap();
        assert_eq!((&v * &w).mod_floor(&h), IntMatrix::identity(4));
    }
}
