//! Finite fields used by the field test: the prime field `F_p` and tower
//! fields `F_p(υ_1, …, υ_i)` realized inside a presentation.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FiniteRingPresentation, RingElement};
use crate::error::{Error, Result};
use crate::linalg::modp::{inv_mod, solve_mod};

pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Number of elements.
    fn order(&self) -> BigInt;
    /// Image of an integer under `Z -> F_p -> F`.
    fn embed_integer(&self, c: &BigInt) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: BigInt,
}

impl PrimeField {
    /// `p` is trusted to be prime.
    pub fn new(p: BigInt) -> Self {
        PrimeField { p }
    }

    pub fn characteristic(&self) -> &BigInt {
        &self.p
    }
}

impl Field for PrimeField {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a + b).mod_floor(&self.p)
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        (-a).mod_floor(&self.p)
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b).mod_floor(&self.p)
    }

    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        inv_mod(a, &self.p)
    }

    fn order(&self) -> BigInt {
        self.p.clone()
    }

    fn embed_integer(&self, c: &BigInt) -> BigInt {
        c.mod_floor(&self.p)
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

/// One adjunction step: generator `υ_{generator}` has minimal polynomial
/// `poly` (monic, coefficients low to high, each an element of the previous
/// stage stored as a ring element) of the given degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStage {
    pub generator: usize,
    pub poly: Vec<RingElement>,
    pub degree: usize,
}

/// A subfield `F_p(υ_{g_1}, …, υ_{g_i})` of a presentation with all `d = p`.
/// Elements are coordinate vectors over `F_p` in the monomial basis
/// `υ_{g_1}^{t_1}···υ_{g_i}^{t_i}`, whose first entry is the identity.
#[derive(Debug, Clone)]
pub struct TowerField {
    ring: FiniteRingPresentation,
    p: BigInt,
    stages: Vec<TowerStage>,
    basis: Vec<RingElement>,
    /// `table[s][t]` are the coordinates of `basis[s]·basis[t]`.
    table: Vec<Vec<Vec<BigInt>>>,
}

impl TowerField {
    /// The prime field `F_p·1` of a presentation with all moduli `p`.
    pub fn prime(ring: &FiniteRingPresentation, p: &BigInt) -> Result<Self> {
        if ring.moduli().iter().any(|d| d != p) {
            return Err(Error::InvalidPresentation(format!("moduli are not all equal to {p}")));
        }
        let one = ring.identity().ok_or_else(|| Error::InvalidPresentation("ring has no identity".into()))?;
        Ok(TowerField {
            ring: ring.clone(),
            p: p.clone(),
            stages: Vec::new(),
            basis: vec![one],
            table: vec![vec![vec![BigInt::one()]]],
        })
    }

    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn characteristic(&self) -> &BigInt {
        &self.p
    }

    pub fn stages(&self) -> &[TowerStage] {
        &self.stages
    }

    pub fn monomial_basis(&self) -> &[RingElement] {
        &self.basis
    }

    pub fn ring(&self) -> &FiniteRingPresentation {
        &self.ring
    }

    pub fn to_ring(&self, a: &[BigInt]) -> RingElement {
        let mut coords = vec![BigInt::zero(); self.ring.m()];
        for (c, b) in a.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in coords.iter_mut().zip(&b.coords) {
                *x += c * y;
            }
        }
        self.ring.reduce(coords)
    }

    /// Coordinates of a ring element lying in this subfield.
    pub fn from_ring(&self, x: &RingElement) -> Option<Vec<BigInt>> {
        let system: Vec<Vec<BigInt>> =
            (0..self.ring.m()).map(|k| self.basis.iter().map(|b| b.coords[k].clone()).collect()).collect();
        solve_mod(&system, &x.coords, &self.p)
    }

    /// Adjoins `υ_generator`, whose minimal polynomial over this field is
    /// `poly` (monic, coefficients low to high).
    pub fn extend(&self, generator: usize, poly: &[Vec<BigInt>]) -> Result<Self> {
        let degree = poly.len().saturating_sub(1);
        if degree == 0 {
            return Err(Error::InvalidPresentation("minimal polynomial of degree 0".into()));
        }
        let u = self.ring.generator(generator);
        let mut basis = Vec::with_capacity(self.basis.len() * degree);
        let mut power = self.basis[0].clone();
        for _ in 0..degree {
            for b in &self.basis {
                basis.push(self.ring.mul_unchecked(b, &power));
            }
            power = self.ring.mul_unchecked(&power, &u);
        }
        let mut next = TowerField {
            ring: self.ring.clone(),
            p: self.p.clone(),
            stages: self.stages.clone(),
            basis,
            table: Vec::new(),
        };
        let n = next.basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for t in s..n {
                let prod = self.ring.mul_unchecked(&next.basis[s], &next.basis[t]);
                let coords = next
                    .from_ring(&prod)
                    .ok_or_else(|| Error::InvalidPresentation("tower basis is not closed under products".into()))?;
                table[t][s] = coords.clone();
                table[s][t] = coords;
            }
        }
        next.table = table;
        next.stages.push(TowerStage { generator, poly: poly.iter().map(|c| self.to_ring(c)).collect(), degree });
        Ok(next)
    }
}

impl Field for TowerField {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.degree()]
    }

    fn one(&self) -> Vec<BigInt> {
        let mut e = self.zero();
        e[0] = BigInt::one();
        e
    }

    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| (x + y).mod_floor(&self.p)).collect()
    }

    fn neg(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| (-x).mod_floor(&self.p)).collect()
    }

    fn mul(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        let n = self.degree();
        let mut out = vec![BigInt::zero(); n];
        for (s, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (o, l) in out.iter_mut().zip(&self.table[s][t]) {
                    *o += &c * l;
                }
            }
        }
        out.iter().map(|x| x.mod_floor(&self.p)).collect()
    }

    fn inv(&self, a: &Vec<BigInt>) -> Option<Vec<BigInt>> {
        if a.iter().all(Zero::is_zero) {
            return None;
        }
        let n = self.degree();
        // column t holds a·basis[t]
        let images: Vec<Vec<BigInt>> = (0..n)
            .map(|t| {
                let mut e = vec![BigInt::zero(); n];
                e[t] = BigInt::one();
                self.mul(a, &e)
            })
            .collect();
        let system: Vec<Vec<BigInt>> = (0..n).map(|u| (0..n).map(|t| images[t][u].clone()).collect()).collect();
        solve_mod(&system, &self.one(), &self.p)
    }

    fn order(&self) -> BigInt {
        self.p.pow(self.degree() as u32)
    }

    fn embed_integer(&self, c: &BigInt) -> Vec<BigInt> {
        let mut e = self.zero();
        e[0] = c.mod_floor(&self.p);
        e
    }
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(BigInt::from(7));
        assert_eq!(f.mul(&BigInt::from(3), &BigInt::from(5)), BigInt::from(1));
        assert_eq!(f.inv(&BigInt::from(3)), Some(BigInt::from(5)));
        assert_eq!(f.inv(&BigInt::from(0)), None);
        assert_eq!(f.sub(&BigInt::from(2), &BigInt::from(5)), BigInt::from(4));
    }

    #[test]
    fn f4_tower_has_inverses() {
        let ring = f4();
        let p = BigInt::from(2);
        let base = TowerField::prime(&ring, &p).unwrap();
        // x² + x + 1
        let f4 = base.extend(1, &[ints(&[1]), ints(&[1]), ints(&[1])]).unwrap();
        assert_eq!(f4.degree(), 2);
        assert_eq!(f4.order(), BigInt::from(4));
        let w = ints(&[0, 1]);
        let w_inv = f4.inv(&w).unwrap();
        assert_eq!(f4.mul(&w, &w_inv), f4.one());
        assert_eq!(f4.to_ring(&w), ring.generator(1));
        assert_eq!(f4.stages()[0].degree, 2);
    }
}
