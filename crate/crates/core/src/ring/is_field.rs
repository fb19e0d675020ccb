//! The field test: a tower of minimal polynomials of the generators over
//! `F_p(υ_1, …, υ_{i-1})`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::field::{Field, PrimeField, TowerField};
use super::poly::{self, Poly};
use super::{FiniteRingPresentation, RingElement};
use crate::error::{Error, Result};
use crate::linalg::modp::solve_mod;

/// Scans `vectors` in order and returns the first linear dependency
/// `v_r = Σ_{t<r} c_t v_t` as the monic coefficient list
/// `(-c_0, …, -c_{r-1}, 1)`.
// (pivot column, normalized row, combination of inputs giving the row)
type EchelonRow<E> = (usize, Vec<E>, Vec<E>);

pub(crate) fn first_dependency<F: Field>(
    field: &F,
    vectors: impl IntoIterator<Item = Vec<F::Elem>>,
) -> Option<Vec<F::Elem>> {
    let mut echelon: Vec<EchelonRow<F::Elem>> = Vec::new();
    for (r, mut v) in vectors.into_iter().enumerate() {
        let mut combo = vec![field.zero(); r + 1];
        combo[r] = field.one();
        for (pivot, row, row_combo) in &echelon {
            let f = v[*pivot].clone();
            if field.is_zero(&f) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x = field.sub(x, &field.mul(&f, y));
            }
            for (x, y) in combo.iter_mut().zip(row_combo) {
                *x = field.sub(x, &field.mul(&f, y));
            }
        }
        match v.iter().position(|x| !field.is_zero(x)) {
            None => return Some(combo),
            Some(pivot) => {
                let inv = field.inv(&v[pivot]).expect("nonzero field element");
                let row = v.iter().map(|x| field.mul(x, &inv)).collect();
                let combo = combo.iter().map(|x| field.mul(x, &inv)).collect();
                echelon.push((pivot, row, combo));
            }
        }
    }
    None
}

fn identity_or_err(ring: &FiniteRingPresentation) -> Result<RingElement> {
    ring.identity().ok_or_else(|| Error::InvalidPresentation("ring has no identity".into()))
}

/// `1, x, x², …, x^m` in ring coordinates.
fn powers(ring: &FiniteRingPresentation, x: &RingElement) -> Result<Vec<RingElement>> {
    let mut out = vec![identity_or_err(ring)?];
    for _ in 0..ring.m() {
        let next = ring.mul_unchecked(out.last().unwrap(), x);
        out.push(next);
    }
    Ok(out)
}

/// Minimal polynomial of `υ_1` over `F_p`, for a presentation with all
/// moduli equal to `p`.
pub fn minimal_polynomial_first(ring: &FiniteRingPresentation, p: &BigInt) -> Result<Poly<BigInt>> {
    minimal_polynomial_prime(ring, p, 0)
}

fn minimal_polynomial_prime(ring: &FiniteRingPresentation, p: &BigInt, generator: usize) -> Result<Poly<BigInt>> {
    if ring.moduli().iter().any(|d| d != p) {
        return Err(Error::InvalidPresentation(format!("moduli are not all equal to {p}")));
    }
    let field = PrimeField::new(p.clone());
    let pw = powers(ring, &ring.generator(generator))?;
    first_dependency(&field, pw.into_iter().map(|x| x.coords))
        .map(|c| Poly::new(&field, c))
        .ok_or_else(|| Error::InvalidPresentation("powers of a generator are independent".into()))
}

/// Minimal polynomial of `υ_generator` over the tower field, coefficients
/// in the tower's monomial coordinates.
///
/// The powers `1, υ, …, υ^m` form the rows of `E` (ring coordinates). A
/// maximal subset `S` of the generators independent over the tower field is
/// found by scanning `υ_1, υ_2, …` in order; each scan step is one `F_p`
/// system obtained by writing the unknown tower coefficients in the
/// monomial basis. The expressions of all generators over `S` form `H`, and
/// the first dependency among the rows of `EH` is the minimal polynomial.
pub fn minimal_polynomial_tower(
    ring: &FiniteRingPresentation,
    tower: &TowerField,
    generator: usize,
) -> Result<Poly<Vec<BigInt>>> {
    let m = ring.m();
    let p = tower.characteristic();
    let basis = tower.monomial_basis();
    let deg = tower.degree();

    let e: Vec<RingElement> = powers(ring, &ring.generator(generator))?;

    let mut selected: Vec<usize> = Vec::new();
    // products basis[s]·υ_j for j in S, stored as columns of the F_p system
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    let mut h_rows: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(m);
    for k in 0..m {
        let target = ring.generator(k);
        let solution = if columns.is_empty() {
            None
        } else {
            let system: Vec<Vec<BigInt>> = (0..m).map(|row| columns.iter().map(|c| c[row].clone()).collect()).collect();
            solve_mod(&system, &target.coords, p)
        };
        match solution {
            Some(x) => h_rows.push(x.chunks(deg).map(<[BigInt]>::to_vec).collect()),
            None => {
                let mut row = vec![tower.zero(); selected.len()];
                row.push(tower.one());
                h_rows.push(row);
                selected.push(k);
                let u = ring.generator(k);
                columns.extend(basis.iter().map(|b| ring.mul_unchecked(b, &u).coords));
            }
        }
    }
    let s = selected.len();
    for row in &mut h_rows {
        row.resize(s, tower.zero());
    }

    let eh = e.iter().map(|power| {
        let mut row = vec![tower.zero(); s];
        for (k, c) in power.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = tower.embed_integer(c);
            for (x, y) in row.iter_mut().zip(&h_rows[k]) {
                *x = tower.add(x, &tower.mul(&c, y));
            }
        }
        row
    });
    first_dependency(tower, eh)
        .map(|c| Poly::new(tower, c))
        .ok_or_else(|| Error::InvalidPresentation("no dependency among m+1 powers".into()))
}

pub fn irreducible_over_field<F: Field>(field: &F, f: &Poly<F::Elem>) -> bool {
    poly::is_irreducible(field, f)
}

/// How the field test ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldOutcome {
    /// The degree product reached `m` (or `m = 1` with prime modulus).
    Field,
    /// The moduli are not all one prime.
    ModuliNotEqualPrime,
    /// The minimal polynomial of this (0-based) generator is reducible.
    Reducible { generator: usize },
    /// No identity element.
    NoIdentity,
    /// Every generator was adjoined without the degrees multiplying to `m`.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldReport {
    pub outcome: FieldOutcome,
    pub characteristic: Option<BigInt>,
    /// Degrees `m_1, m_2, …` of the minimal polynomials computed.
    pub degrees: Vec<usize>,
}

impl FieldReport {
    pub fn is_field(&self) -> bool {
        self.outcome == FieldOutcome::Field
    }
}

/// Runs the field test and reports where it stopped.
pub fn field_test(ring: &FiniteRingPresentation) -> FieldReport {
    let Some(p) = ring.check_prime_equal_d() else {
        return FieldReport { outcome: FieldOutcome::ModuliNotEqualPrime, characteristic: None, degrees: vec![] };
    };
    let report = |outcome, degrees| FieldReport { outcome, characteristic: Some(p.clone()), degrees };
    let m = ring.m();
    if m == 1 {
        return report(FieldOutcome::Field, vec![]);
    }
    let Ok(f1) = minimal_polynomial_first(ring, &p) else {
        return report(FieldOutcome::NoIdentity, vec![]);
    };
    let m1 = f1.degree().unwrap_or(0);
    let mut degrees = vec![m1];
    if !irreducible_over_field(&PrimeField::new(p.clone()), &f1) {
        return report(FieldOutcome::Reducible { generator: 0 }, degrees);
    }
    if m1 == m {
        return report(FieldOutcome::Field, degrees);
    }
    let Ok(base) = TowerField::prime(ring, &p) else {
        return report(FieldOutcome::NoIdentity, degrees);
    };
    let f1_tower: Vec<Vec<BigInt>> = f1.coeffs().iter().map(|c| base.embed_integer(c)).collect();
    let Ok(mut tower) = base.extend(0, &f1_tower) else {
        return report(FieldOutcome::Exhausted, degrees);
    };
    let mut product = m1;
    for i in 1..m {
        let Ok(fi) = minimal_polynomial_tower(ring, &tower, i) else {
            return report(FieldOutcome::Exhausted, degrees);
        };
        let mi = fi.degree().unwrap_or(0);
        degrees.push(mi);
        if !irreducible_over_field(&tower, &fi) {
            return report(FieldOutcome::Reducible { generator: i }, degrees);
        }
        product *= mi;
        debug_assert!(product <= m);
        if product == m {
            return report(FieldOutcome::Field, degrees);
        }
        if mi > 1 {
            match tower.extend(i, fi.coeffs()) {
                Ok(next) => tower = next,
                Err(_) => return report(FieldOutcome::Exhausted, degrees),
            }
        }
    }
    report(FieldOutcome::Exhausted, degrees)
}

/// True iff the presentation is a field.
pub fn is_field(ring: &FiniteRingPresentation) -> bool {
    field_test(ring).is_field()
}
