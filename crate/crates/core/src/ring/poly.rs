//! Univariate polynomials over a [`Field`], coefficients stored low to high
//! with no trailing zeros.

use num_bigint::{BigInt, BigUint};

use super::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn x<F: Field<Elem = E>>(field: &F) -> Self {
        Poly { coeffs: vec![field.zero(), field.one()] }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

impl Poly<BigInt> {
    /// Coefficients as decimal integers, low to high.
    pub fn to_integers(&self) -> Vec<BigInt> {
        self.coeffs.clone()
    }
}

pub fn sub<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let n = a.coeffs.len().max(b.coeffs.len());
    let zero = field.zero();
    let coeffs =
        (0..n).map(|i| field.sub(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero))).collect();
    Poly::new(field, coeffs)
}

pub fn mul<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    Poly::new(field, out)
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn rem<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let db = b.degree().expect("division by the zero polynomial");
    let lead_inv = field.inv(b.leading().unwrap()).expect("leading coefficient is nonzero");
    let mut r = a.coeffs.clone();
    while r.len() > db {
        let top = r.len() - 1;
        let c = field.mul(&r[top], &lead_inv);
        if !field.is_zero(&c) {
            for (k, bk) in b.coeffs.iter().enumerate() {
                let idx = top - db + k;
                r[idx] = field.sub(&r[idx], &field.mul(&c, bk));
            }
        }
        r.pop();
    }
    Poly::new(field, r)
}

pub fn monic<F: Field>(field: &F, a: &Poly<F::Elem>) -> Poly<F::Elem> {
    match a.leading() {
        None => Poly::zero(),
        Some(l) => {
            let inv = field.inv(l).expect("leading coefficient is nonzero");
            Poly::new(field, a.coeffs.iter().map(|c| field.mul(c, &inv)).collect())
        }
    }
}

/// Monic greatest common divisor (zero only if both inputs are zero).
pub fn gcd<F: Field>(field: &F, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = rem(field, &a, &b);
        a = b;
        b = r;
    }
    monic(field, &a)
}

pub fn powmod<F: Field>(field: &F, base: &Poly<F::Elem>, e: &BigUint, modulus: &Poly<F::Elem>) -> Poly<F::Elem> {
    let mut result = rem(field, &Poly::new(field, vec![field.one()]), modulus);
    let base = rem(field, base, modulus);
    for i in (0..e.bits()).rev() {
        result = rem(field, &mul(field, &result, &result), modulus);
        if e.bit(i) {
            result = rem(field, &mul(field, &result, &base), modulus);
        }
    }
    result
}

/// Value at a point, by Horner's rule.
pub fn eval<F: Field>(field: &F, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
    a.coeffs.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut r = 2;
    while r * r <= n {
        if n % r == 0 {
            out.push(r);
            while n % r == 0 {
                n /= r;
            }
        }
        r += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree `n` over `F_q` is irreducible iff
/// `x^(q^n) ≡ x (mod f)` and `gcd(x^(q^(n/r)) - x, f) = 1` for each prime
/// `r | n`. Constants are not irreducible.
pub fn is_irreducible<F: Field>(field: &F, f: &Poly<F::Elem>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = monic(field, f);
    let q = field.order().to_biguint().expect("field order is positive");
    let x = Poly::x(field);
    let rs = prime_divisors(n);
    let checkpoints: Vec<usize> = rs.iter().map(|r| n / r).collect();
    let mut frob = x.clone();
    for k in 1..=n {
        frob = powmod(field, &frob, &q, &f);
        if checkpoints.contains(&k) && gcd(field, &sub(field, &frob, &x), &f).degree() != Some(0) {
            return false;
        }
    }
    sub(field, &frob, &x).is_zero()
}
