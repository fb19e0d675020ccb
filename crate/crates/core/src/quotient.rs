//! Basis representation of `O/I` from a two-generated ideal.
//!
//! With `H_M` the Hermite basis of `I` and `V·H_M·U = S` its Smith form,
//! the elements `η = ω·V^{-1}` form a basis of `O` in which `I` has basis
//! `d_i η_i`. Products `η_i η_j = Σ_k t_ijk η_k` are computed modulo `h`
//! from `A_k = Ṽ^T C_k Ṽ` and `t_ij = V·a_ij`, with `Ṽ ≡ V^{-1} (mod h)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{inverse_mod, snf_with_transforms, IntMatrix};
use crate::order::{ideal_hnf_basis, OrderElement, OrderPresentation, TwoGenIdeal};
use crate::ring::{FiniteRingPresentation, RingElement};

/// Transformation data behind a quotient presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCertificate {
    /// Hermite basis `H_M` of the ideal.
    pub ideal_hnf: IntMatrix,
    pub v: IntMatrix,
    pub u: IntMatrix,
    /// Every Smith diagonal entry, including trailing ones.
    pub divisors: Vec<BigInt>,
    /// `V^{-1} mod h`; its columns are the `η_i` in ω-coordinates.
    pub v_inv_mod_h: IntMatrix,
    pub h: BigInt,
    pub norm: BigInt,
}

impl QuotientCertificate {
    /// Number of generators kept (divisors above one).
    pub fn m(&self) -> usize {
        self.divisors.iter().filter(|d| !d.is_one()).count()
    }

    /// Image of an order element: `(V x)_i mod d_i` on the kept positions.
    pub fn project(&self, x: &OrderElement) -> RingElement {
        let vx = self.v.mul_vec(&x.coords);
        RingElement { coords: vx.iter().zip(&self.divisors).take(self.m()).map(|(c, d)| c.mod_floor(d)).collect() }
    }

    /// `V·H_M·U = S`.
    pub fn verify(&self) -> bool {
        let s = IntMatrix::diagonal(&self.divisors);
        &(&self.v * &self.ideal_hnf) * &self.u == s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum QuotientBasis {
    UnitIdeal,
    Quotient { ring: FiniteRingPresentation, certificate: QuotientCertificate },
}

impl QuotientBasis {
    pub fn ring(&self) -> Option<&FiniteRingPresentation> {
        match self {
            QuotientBasis::UnitIdeal => None,
            QuotientBasis::Quotient { ring, .. } => Some(ring),
        }
    }

    pub fn certificate(&self) -> Option<&QuotientCertificate> {
        match self {
            QuotientBasis::UnitIdeal => None,
            QuotientBasis::Quotient { certificate, .. } => Some(certificate),
        }
    }
}

/// `O/I` as a basis representation, or [`QuotientBasis::UnitIdeal`] when
/// `N(I) = 1`. `h` must be a positive multiple of the generator norms.
pub fn output_basis(order: &OrderPresentation, ideal: &TwoGenIdeal, h: &BigInt) -> Result<QuotientBasis> {
    if !h.is_positive() {
        return Err(Error::InvalidModulus(format!("h = {h} must be positive")));
    }
    let basis = ideal_hnf_basis(order, ideal, h)?;
    if basis.norm.is_one() {
        return Ok(QuotientBasis::UnitIdeal);
    }
    if !h.is_multiple_of(&basis.norm) {
        return Err(Error::InvalidModulus(format!("N(I) = {} does not divide h = {h}", basis.norm)));
    }
    let snf = snf_with_transforms(&basis.hnf, h)?;
    let divisors = snf.divisors();
    let v_inv = inverse_mod(&snf.v, h)?;
    let n = order.rank();
    let m = divisors.iter().filter(|d| !d.is_one()).count();

    // a_ij[i][j][k] = (Ṽ^T C_k Ṽ)_ij, only for the kept positions i, j < m
    let w = |a: usize, i: usize| &v_inv[(a, i)];
    let mut a_ij = vec![vec![vec![BigInt::zero(); n]; m]; m];
    for k in 0..n {
        // C_k Ṽ
        let mut ck_v = vec![vec![BigInt::zero(); m]; n];
        for a in 0..n {
            for j in 0..m {
                let mut acc = BigInt::zero();
                for b in 0..n {
                    let c = order.c(a, b, k);
                    if !c.is_zero() {
                        acc += c * w(b, j);
                    }
                }
                ck_v[a][j] = acc.mod_floor(h);
            }
        }
        for i in 0..m {
            for j in 0..m {
                let mut acc = BigInt::zero();
                for a in 0..n {
                    acc += w(a, i) * &ck_v[a][j];
                }
                a_ij[i][j][k] = acc.mod_floor(h);
            }
        }
    }

    let mut l = Vec::with_capacity(m * m * m);
    for row in &a_ij {
        for a in row {
            let t = snf.v.mul_vec(a);
            l.extend(t.iter().zip(&divisors).take(m).map(|(x, d)| x.mod_floor(h).mod_floor(d)));
        }
    }
    let ring = FiniteRingPresentation::new(divisors[..m].to_vec(), l)?;
    Ok(QuotientBasis::Quotient {
        ring,
        certificate: QuotientCertificate {
            ideal_hnf: basis.hnf,
            v: snf.v,
            u: snf.u,
            divisors,
            v_inv_mod_h: v_inv,
            h: h.clone(),
            norm: basis.norm,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::order::norm_multiple;
    use crate::ring::is_field;

    fn ideal(a: &[i64], b: &[i64]) -> TwoGenIdeal {
        TwoGenIdeal::new(OrderElement::from_i64(a), OrderElement::from_i64(b)).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gaussian_examples() {
        let z_i = fixtures::gaussian();
        let q = output_basis(&z_i, &ideal(&[1, 1], &[2, 0]), &BigInt::from(8)).unwrap();
        let ring = q.ring().unwrap();
        assert_eq!(ring.moduli(), ints(&[2]).as_slice());
        assert_eq!(ring.constant(0, 0, 0), &BigInt::one());

        assert_eq!(output_basis(&z_i, &ideal(&[1, 0], &[1, 0]), &BigInt::one()).unwrap(), QuotientBasis::UnitIdeal);

        let q = output_basis(&z_i, &ideal(&[2, 0], &[2, 0]), &BigInt::from(16)).unwrap();
        let ring = q.ring().unwrap();
        assert_eq!(ring.moduli(), ints(&[2, 2]).as_slice());
        assert!(ring.validate().is_empty());
        assert!(q.certificate().unwrap().verify());

        let q = output_basis(&z_i, &ideal(&[5, 0], &[5, 0]), &BigInt::from(625)).unwrap();
        let ring = q.ring().unwrap();
        assert_eq!(ring.moduli(), ints(&[5, 5]).as_slice());
        let cert = q.certificate().unwrap();
        let i = cert.project(&OrderElement::from_i64(&[0, 1]));
        let one = cert.project(&z_i.one());
        let minus_one = ring.neg(&one).unwrap();
        assert_eq!(ring.mul(&i, &i).unwrap(), minus_one);
        assert_eq!(ring.identity().unwrap(), one);
    }

    #[test]
    fn divisor_product_is_norm() {
        let z5 = fixtures::sqrt_minus5();
        let i = ideal(&[6, 0], &[2, 2]);
        let h = norm_multiple(&z5, &i).unwrap();
        let q = output_basis(&z5, &i, &h).unwrap();
        let cert = q.certificate().unwrap();
        assert_eq!(cert.divisors.iter().product::<BigInt>(), cert.norm);
        assert_eq!(cert.norm, BigInt::from(12));
    }

    #[test]
    fn projection_is_a_ring_map() {
        let o = fixtures::cubic_23();
        let i = ideal(&[6, 0, 0], &[2, 2, 0]);
        let h = norm_multiple(&o, &i).unwrap();
        let q = output_basis(&o, &i, &h).unwrap();
        let ring = q.ring().unwrap();
        let cert = q.certificate().unwrap();
        let x = OrderElement::from_i64(&[3, -4, 7]);
        let y = OrderElement::from_i64(&[-2, 5, 1]);
        let xy = o.mul(&x, &y).unwrap();
        assert_eq!(ring.mul(&cert.project(&x), &cert.project(&y)).unwrap(), cert.project(&xy));
        assert!(cert.project(&i.alpha).is_zero());
        assert!(cert.project(&i.beta).is_zero());
    }

    #[test]
    fn different_h_same_divisors() {
        let o = fixtures::eisenstein();
        let i = ideal(&[7, 0], &[3, 1]);
        let h = norm_multiple(&o, &i).unwrap();
        let a = output_basis(&o, &i, &h).unwrap();
        let b = output_basis(&o, &i, &(&h * 2)).unwrap();
        assert_eq!(a.ring().unwrap().moduli(), b.ring().unwrap().moduli());
        assert!(is_field(a.ring().unwrap()));
    }

    #[test]
    fn bad_modulus() {
        let z_i = fixtures::gaussian();
        assert!(matches!(output_basis(&z_i, &ideal(&[1, 1], &[2, 0]), &BigInt::zero()), Err(Error::InvalidModulus(_))));
    }
}
