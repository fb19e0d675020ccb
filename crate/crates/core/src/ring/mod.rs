//! Finite commutative rings given by a basis representation
//! `(m; d_1..d_m; l_ijk)`: the additive group is `Z/d_1 ⊕ … ⊕ Z/d_m` on
//! generators `υ_1..υ_m`, and `υ_i·υ_j = Σ_k l_ijk υ_k`.

mod field;
mod is_field;
mod local;
pub mod poly;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{hnf_with_transform, modp, IntMatrix};
use crate::primality::is_prime_integer;

pub use field::{Field, PrimeField, TowerField};
pub use is_field::{
    field_test, irreducible_over_field, is_field, minimal_polynomial_first, minimal_polynomial_tower, FieldOutcome,
    FieldReport,
};
pub use local::{frobenius_matrix, is_local, nilradical_mod_p, quotient_by_subspace};
pub use poly::Poly;

/// A basis representation of a finite commutative ring.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRingPresentation {
    d: Vec<BigInt>,
    /// `l[(i*m + j)*m + k]`
    l: Vec<BigInt>,
}

/// Coordinates `(x_1..x_m)` with `0 <= x_i < d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub coords: Vec<BigInt>,
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// An algebraic identity the structure constants fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationDefect {
    Commutativity {
        i: usize,
        j: usize,
    },
    /// `d_i·(υ_i υ_j)` is not zero, so multiplication is not well defined.
    WellDefinedness {
        i: usize,
        j: usize,
    },
    Associativity {
        i: usize,
        j: usize,
        k: usize,
    },
    NoIdentity,
}

impl fmt::Display for PresentationDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationDefect::Commutativity { i, j } => {
                write!(f, "u{}*u{} != u{}*u{}", i + 1, j + 1, j + 1, i + 1)
            }
            PresentationDefect::WellDefinedness { i, j } => {
                write!(f, "d{a}*(u{a}*u{b}) != 0", a = i + 1, b = j + 1)
            }
            PresentationDefect::Associativity { i, j, k } => {
                write!(f, "(u{a}*u{b})*u{c} != u{a}*(u{b}*u{c})", a = i + 1, b = j + 1, c = k + 1)
            }
            PresentationDefect::NoIdentity => write!(f, "no identity element"),
        }
    }
}

impl FiniteRingPresentation {
    /// Checks shapes, `d_i >= 2`, the chain `d_{i+1} | d_i` and
    /// `0 <= l_ijk < d_k`. Algebraic identities are checked by
    /// [`validate`](Self::validate).
    pub fn new(d: Vec<BigInt>, l: Vec<BigInt>) -> Result<Self> {
        let m = d.len();
        if m == 0 {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if l.len() != m * m * m {
            return Err(Error::InvalidPresentation(format!("{} structure constants for {m} generators", l.len())));
        }
        if let Some(i) = d.iter().position(|x| x < &BigInt::from(2)) {
            return Err(Error::InvalidPresentation(format!("d_{} = {} < 2", i + 1, d[i])));
        }
        if let Some(i) = (0..m - 1).find(|&i| !d[i].is_multiple_of(&d[i + 1])) {
            return Err(Error::InvalidPresentation(format!(
                "d_{} = {} does not divide d_{} = {}",
                i + 2,
                d[i + 1],
                i + 1,
                d[i]
            )));
        }
        for (idx, c) in l.iter().enumerate() {
            let k = idx % m;
            if c.is_negative() || c >= &d[k] {
                return Err(Error::InvalidPresentation(format!(
                    "structure constant l[{}][{}][{}] = {c} not reduced modulo {}",
                    idx / (m * m),
                    (idx / m) % m,
                    k,
                    d[k]
                )));
            }
        }
        Ok(FiniteRingPresentation { d, l })
    }

    /// From nested constants `l[i][j][k]`.
    pub fn from_nested(d: Vec<BigInt>, l: Vec<Vec<Vec<BigInt>>>) -> Result<Self> {
        let m = d.len();
        if l.len() != m || l.iter().any(|r| r.len() != m || r.iter().any(|c| c.len() != m)) {
            return Err(Error::InvalidPresentation(format!("structure constants are not {m}x{m}x{m}")));
        }
        Self::new(d, l.into_iter().flatten().flatten().collect())
    }

    pub fn m(&self) -> usize {
        self.d.len()
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.d
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &BigInt {
        let m = self.m();
        &self.l[(i * m + j) * m + k]
    }

    /// `l[i][j]` as a ring element, i.e. the product `υ_i·υ_j`.
    pub fn generator_product(&self, i: usize, j: usize) -> RingElement {
        let m = self.m();
        let start = (i * m + j) * m;
        RingElement { coords: self.l[start..start + m].to_vec() }
    }

    pub fn constants_nested(&self) -> Vec<Vec<Vec<BigInt>>> {
        let m = self.m();
        (0..m).map(|i| (0..m).map(|j| self.generator_product(i, j).coords).collect()).collect()
    }

    /// Number of elements, `∏ d_i`.
    pub fn size(&self) -> BigInt {
        self.d.iter().product()
    }

    pub fn zero(&self) -> RingElement {
        RingElement { coords: vec![BigInt::zero(); self.m()] }
    }

    pub fn generator(&self, i: usize) -> RingElement {
        let mut x = self.zero();
        x.coords[i] = BigInt::one();
        x
    }

    /// Reduces arbitrary integer coordinates into range.
    pub fn element(&self, coords: Vec<BigInt>) -> Result<RingElement> {
        if coords.len() != self.m() {
            return Err(Error::Dimension(format!(
                "element has {} coordinates, ring has {} generators",
                coords.len(),
                self.m()
            )));
        }
        Ok(self.reduce(coords))
    }

    fn reduce(&self, mut coords: Vec<BigInt>) -> RingElement {
        for (x, d) in coords.iter_mut().zip(&self.d) {
            *x = x.mod_floor(d);
        }
        RingElement { coords }
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if x.coords.len() != self.m() {
            return Err(Error::Dimension(format!(
                "element of length {} used in a ring with {} generators",
                x.coords.len(),
                self.m()
            )));
        }
        Ok(())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce(x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect()))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        Ok(self.reduce(x.coords.iter().map(|a| -a).collect()))
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.add(x, &self.neg(y)?)
    }

    pub fn scale(&self, c: &BigInt, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        Ok(self.reduce(x.coords.iter().map(|a| a * c).collect()))
    }

    /// `(x·y)_k = Σ_ij x_i y_j l_ijk mod d_k`.
    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let m = self.m();
        let mut out = vec![BigInt::zero(); m];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let base = (i * m + j) * m;
                for (k, o) in out.iter_mut().enumerate() {
                    let l = &self.l[base + k];
                    if !l.is_zero() {
                        *o += &c * l;
                    }
                }
            }
        }
        self.reduce(out)
    }

    /// `x^e`; `x^0` is the identity, which must exist.
    pub fn pow(&self, x: &RingElement, e: &BigUint) -> Result<RingElement> {
        self.check(x)?;
        if e.is_zero() {
            return self.identity().ok_or_else(|| Error::InvalidPresentation("ring has no identity".into()));
        }
        Ok(self.pow_positive(x, e))
    }

    pub(crate) fn pow_positive(&self, x: &RingElement, e: &BigUint) -> RingElement {
        debug_assert!(!e.is_zero());
        let mut result = x.clone();
        for i in (0..e.bits() - 1).rev() {
            result = self.mul_unchecked(&result, &result);
            if e.bit(i) {
                result = self.mul_unchecked(&result, x);
            }
        }
        result
    }

    /// The common prime value of all `d_i`, if they are equal and prime.
    pub fn check_prime_equal_d(&self) -> Option<BigInt> {
        let p = &self.d[0];
        (self.d.iter().all(|x| x == p) && is_prime_integer(p)).then(|| p.clone())
    }

    /// The multiplicative identity: the unique `e` with `e·υ_j = υ_j` for
    /// every generator, found by solving that linear system over the mixed
    /// moduli `d_k`.
    pub fn identity(&self) -> Option<RingElement> {
        let m = self.m();
        if let Some(p) = self.check_prime_equal_d() {
            // rows (j, k), unknown e_i: Σ_i e_i l_ijk = δ_jk
            let mut a = Vec::with_capacity(m * m);
            let mut b = Vec::with_capacity(m * m);
            for j in 0..m {
                for k in 0..m {
                    a.push((0..m).map(|i| self.constant(i, j, k).clone()).collect());
                    b.push(if j == k { BigInt::one() } else { BigInt::zero() });
                }
            }
            let e = modp::solve_mod(&a, &b, &p)?;
            return Some(self.reduce(e)).filter(|e| self.is_identity(e));
        }
        self.identity_mixed()
    }

    /// Integer formulation: `[L | diag(d_k)]·(e; z) = δ`, solved through the
    /// Hermite form of the (full row rank) coefficient matrix.
    fn identity_mixed(&self) -> Option<RingElement> {
        let m = self.m();
        let rows = m * m;
        let mut a = IntMatrix::zeros(rows, m + rows);
        let mut rhs = vec![BigInt::zero(); rows];
        for j in 0..m {
            for k in 0..m {
                let r = j * m + k;
                for i in 0..m {
                    a[(r, i)] = self.constant(i, j, k).clone();
                }
                a[(r, m + r)] = self.d[k].clone();
                if j == k {
                    rhs[r] = BigInt::one();
                }
            }
        }
        let det_multiple = self.size().pow(m as u32);
        let hnf = hnf_with_transform(&a, &det_multiple).ok()?;
        // Back substitution in the upper-triangular H.
        let n = rows;
        let mut y = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let mut acc = rhs[i].clone();
            for j in i + 1..n {
                acc -= &hnf.h[(i, j)] * &y[j];
            }
            let (q, r) = acc.div_rem(&hnf.h[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
        let cols = a.cols();
        let x: Vec<BigInt> = (0..m).map(|i| (0..n).map(|t| &hnf.u[(i, cols - n + t)] * &y[t]).sum()).collect();
        Some(self.reduce(x)).filter(|e| self.is_identity(e))
    }

    fn is_identity(&self, e: &RingElement) -> bool {
        (0..self.m()).all(|j| {
            let g = self.generator(j);
            self.mul_unchecked(e, &g) == g
        })
    }

    /// Algebraic checks on the structure constants. An empty list means the
    /// constants define a commutative ring with identity.
    pub fn validate(&self) -> Vec<PresentationDefect> {
        let m = self.m();
        let mut defects = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if self.generator_product(i, j) != self.generator_product(j, i) {
                    defects.push(PresentationDefect::Commutativity { i, j });
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                let p = self.generator_product(i, j);
                if !self.scale(&self.d[i], &p).map(|x| x.is_zero()).unwrap_or(false) {
                    defects.push(PresentationDefect::WellDefinedness { i, j });
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                let ij = self.generator_product(i, j);
                for k in 0..m {
                    let jk = self.generator_product(j, k);
                    let left = self.mul_unchecked(&ij, &self.generator(k));
                    let right = self.mul_unchecked(&self.generator(i), &jk);
                    if left != right {
                        defects.push(PresentationDefect::Associativity { i, j, k });
                    }
                }
            }
        }
        if defects.is_empty() && self.identity().is_none() {
            defects.push(PresentationDefect::NoIdentity);
        }
        defects
    }

    /// The presentation of `R/pR` for a prime `p` dividing every `d_i`:
    /// all moduli become `p` and the constants are reduced modulo `p`.
    pub fn reduce_mod_prime(&self, p: &BigInt) -> Result<Self> {
        if self.d.iter().any(|d| !d.is_multiple_of(p)) {
            return Err(Error::InvalidPresentation(format!("{p} does not divide every modulus")));
        }
        Self::new(vec![p.clone(); self.m()], self.l.iter().map(|c| c.mod_floor(p)).collect())
    }
}

impl fmt::Debug for FiniteRingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRingPresentation")
            .field("d", &self.d.iter().map(ToString::to_string).collect::<Vec<_>>())
            .field("l", &self.l.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}
