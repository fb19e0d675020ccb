//! Local-ring test. With `p` the common prime of the moduli and
//! `A = R/pR`, the ring is local iff `A/Nil(A)` is a field; the nilradical
//! is the kernel of a high enough power of the Frobenius map `x ↦ x^p`,
//! which is `F_p`-linear on `A`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::is_field::is_field;
use super::{FiniteRingPresentation, RingElement};
use crate::error::{Error, Result};
use crate::linalg::modp::{kernel_mod, mat_mul_mod, rref};
use crate::primality::prime_power_root;

/// Row `j` holds the coordinates of `υ_j^p`, so that `F(x) = x · M` for a
/// coordinate row vector `x`. All moduli must equal `p`.
pub fn frobenius_matrix(a: &FiniteRingPresentation, p: &BigInt) -> Vec<Vec<BigInt>> {
    let e = p.to_biguint().expect("positive prime");
    (0..a.m()).map(|j| a.pow_positive(&a.generator(j), &e).coords).collect()
}

/// `F_p`-basis of the nilpotent elements of a presentation whose moduli all
/// equal the prime `p`.
pub fn nilradical_mod_p(a: &FiniteRingPresentation, p: &BigInt) -> Vec<RingElement> {
    let m = a.m();
    let frob = frobenius_matrix(a, p);
    // p^e >= m
    let mut iterate = frob.clone();
    let mut reach = p.clone();
    while reach < BigInt::from(m) {
        iterate = mat_mul_mod(&iterate, &frob, p);
        reach *= p;
    }
    // x · M = 0  <=>  M^T x^T = 0
    let transposed: Vec<Vec<BigInt>> = (0..m).map(|c| (0..m).map(|r| iterate[r][c].clone()).collect()).collect();
    kernel_mod(&transposed, m, p).into_iter().map(|coords| RingElement { coords }).collect()
}

/// `A/N` for an ideal `N` of `A` spanned by `ideal`, presented on the
/// generators of `A` that are not pivots of `N`'s echelon form.
pub fn quotient_by_subspace(
    a: &FiniteRingPresentation,
    p: &BigInt,
    ideal: &[RingElement],
) -> Result<FiniteRingPresentation> {
    let m = a.m();
    let mut rows: Vec<Vec<BigInt>> = ideal.iter().map(|x| x.coords.clone()).collect();
    let pivots = if rows.is_empty() { Vec::new() } else { rref(&mut rows, p) };
    let keep: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    if keep.is_empty() {
        return Err(Error::InvalidPresentation("quotient by the whole ring".into()));
    }
    let reduce = |x: &RingElement| -> Vec<BigInt> {
        let mut v = x.coords.clone();
        for (r, &c) in pivots.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (vi, ri) in v.iter_mut().zip(&rows[r]) {
                *vi -= &f * ri;
            }
        }
        keep.iter().map(|&k| v[k].mod_floor(p)).collect()
    };
    let n = keep.len();
    let mut l = Vec::with_capacity(n * n * n);
    for &i in &keep {
        for &j in &keep {
            l.extend(reduce(&a.generator_product(i, j)));
        }
    }
    FiniteRingPresentation::new(vec![p.clone(); n], l)
}

/// True iff the presentation is a local ring.
pub fn is_local(ring: &FiniteRingPresentation) -> bool {
    let Some((p, _)) = prime_power_root(&ring.moduli()[0]) else {
        return false;
    };
    if ring.moduli().iter().any(|d| prime_power_root(d).map(|(q, _)| q) != Some(p.clone())) {
        return false;
    }
    if ring.identity().is_none() {
        return false;
    }
    let Ok(a) = ring.reduce_mod_prime(&p) else {
        return false;
    };
    let nil = nilradical_mod_p(&a, &p);
    match quotient_by_subspace(&a, &p, &nil) {
        Ok(q) => is_field(&q),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::*;

    #[test]
    fn nilradical_examples() {
        let p2 = BigInt::from(2);
        let a = gaussian_mod(2);
        assert_eq!(frobenius_matrix(&a, &p2), vec![ints(&[1, 0]), ints(&[1, 0])]);
        let nil = nilradical_mod_p(&a, &p2);
        assert_eq!(nil.len(), 1);
        assert_eq!(nil[0].coords, ints(&[1, 1]));
        assert!(nilradical_mod_p(&gaussian_mod(5), &BigInt::from(5)).is_empty());
        assert!(nilradical_mod_p(&f2(), &p2).is_empty());
    }

    #[test]
    fn local_examples() {
        assert!(is_local(&gaussian_mod(2)));
        assert!(!is_local(&gaussian_mod(5)));
        assert!(is_local(&gaussian_mod(3)));
        assert!(is_local(&z_mod(9)));
        assert!(!is_local(&z_mod(6)));
        assert!(!is_local(&f2_times_f2()));
        // Z/4 × Z/2 with idempotent generators is not local
        let r = presentation(&[4, 2], &[&[&[1, 0], &[0, 0]], &[&[0, 0], &[0, 1]]]);
        assert!(!is_local(&r));
        // Z/8[x]/(x^2): chain (8, 8)
        let r = presentation(&[8, 8], &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]]);
        assert!(is_local(&r));
    }
}
