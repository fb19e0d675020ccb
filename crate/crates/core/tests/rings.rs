mod common;

use dedekind_core::oracle::{enumerate_presentation, oracle_is_field, oracle_is_local, DEFAULT_CAP};
use dedekind_core::order::norm_multiple;
use dedekind_core::quotient::output_basis;
use dedekind_core::ring::{field_test, frobenius_matrix, is_field, is_local, FiniteRingPresentation, RingElement};
use dedekind_core::BigInt;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn presentation(d: &[i64], l: &[&[&[i64]]]) -> FiniteRingPresentation {
    FiniteRingPresentation::from_nested(
        common::big(d),
        l.iter().map(|row| row.iter().map(|v| common::big(v)).collect()).collect(),
    )
    .unwrap()
}

fn hand_built() -> Vec<(&'static str, FiniteRingPresentation, bool, bool)> {
    vec![
        ("F4", presentation(&[2, 2], &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[1, 1]]]), true, true),
        ("F9", presentation(&[3, 3], &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[2, 0]]]), true, true),
        ("Z/9", presentation(&[9], &[&[&[1]]]), false, true),
        ("F2xF2", presentation(&[2, 2], &[&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]]), false, false),
        (
            "F8",
            presentation(
                &[2, 2, 2],
                &[
                    &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
                    &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]],
                    &[&[0, 0, 1], &[1, 1, 0], &[0, 1, 1]],
                ],
            ),
            true,
            true,
        ),
        ("Z/4[x]/(x^2)", presentation(&[4, 4], &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]]), false, true),
    ]
}

#[test]
fn hand_built_presentations() {
    for (name, r, field, local) in hand_built() {
        assert!(r.validate().is_empty(), "{name}");
        let e = enumerate_presentation(&r, DEFAULT_CAP).unwrap();
        assert_eq!(oracle_is_field(&e), field, "{name} oracle");
        assert_eq!(oracle_is_local(&e), local, "{name} oracle");
        assert_eq!(is_field(&r), field, "{name}");
        assert_eq!(is_local(&r), local, "{name}");
    }
}

#[test]
fn quotient_presentations_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, o) in common::rings() {
        for _ in 0..25 {
            let (i, _) = common::ideal_with_norm_at_most(&mut rng, &o, 512);
            let h = norm_multiple(&o, &i).unwrap();
            let Some(ring) = output_basis(&o, &i, &h).unwrap().ring().cloned() else { continue };
            let e = enumerate_presentation(&ring, DEFAULT_CAP).unwrap();
            let report = field_test(&ring);
            assert_eq!(report.is_field(), oracle_is_field(&e), "{name} {i:?}");
            assert_eq!(is_local(&ring), oracle_is_local(&e), "{name} {i:?}");
            if report.is_field() {
                assert!(is_local(&ring));
            }
            assert!(report.degrees.iter().product::<usize>() <= ring.m());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn frobenius_is_linear(seed in any::<u64>(), p in prop::sample::select(vec![2i64, 3, 5, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rings = common::rings();
        let (_, o) = &rings[rng.gen_range(0..rings.len())];
        let pp = BigInt::from(p);
        let i = dedekind_core::TwoGenIdeal::principal(o.scalar(&pp)).unwrap();
        let q = output_basis(o, &i, &norm_multiple(o, &i).unwrap()).unwrap();
        let a = q.ring().unwrap();
        let frob = |x: &RingElement| {
            let mut out = a.zero();
            if !x.is_zero() {
                out = a.pow(x, &BigUint::from(p as u64)).unwrap();
            }
            out
        };
        let m = a.m();
        let x = a.element((0..m).map(|_| BigInt::from(rng.gen_range(0..p))).collect()).unwrap();
        let y = a.element((0..m).map(|_| BigInt::from(rng.gen_range(0..p))).collect()).unwrap();
        let lambda = BigInt::from(rng.gen_range(0..p));
        prop_assert_eq!(frob(&a.add(&x, &y).unwrap()), a.add(&frob(&x), &frob(&y)).unwrap());
        prop_assert_eq!(frob(&a.scale(&lambda, &x).unwrap()), a.scale(&lambda, &frob(&x)).unwrap());
        // the matrix form agrees with powering
        let matrix = frobenius_matrix(a, &pp);
        let via_matrix: Vec<BigInt> = (0..m)
            .map(|k| (0..m).map(|j| &x.coords[j] * &matrix[j][k]).sum::<BigInt>() % &pp)
            .collect();
        prop_assert_eq!(via_matrix, frob(&x).coords);
    }
}
