//! Smith normal form of nonsingular square matrices, and inversion of
//! unimodular matrices modulo an integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{modp::inv_mod, xgcd, IntMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal form `diag(d_1, ..., d_n)` with `d_{i+1} | d_i`.
    pub s: IntMatrix,
    /// Right transform, `V·B·U = S`.
    pub u: IntMatrix,
    /// Left transform.
    pub v: IntMatrix,
}

impl SnfResult {
    /// The elementary divisors, largest first.
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.s.rows()).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Checks `V·B·U = S`, the diagonal shape and the divisibility chain.
    pub fn verify(&self, b: &IntMatrix) -> bool {
        let Ok(vb) = self.v.checked_mul(b) else {
            return false;
        };
        let Ok(vbu) = vb.checked_mul(&self.u) else {
            return false;
        };
        let d = self.divisors();
        vbu == self.s
            && self.s == IntMatrix::diagonal(&d)
            && d.iter().all(Signed::is_positive)
            && d.windows(2).all(|w| w[0].is_multiple_of(&w[1]))
    }
}

/// Smith normal form with both transforms, by pivoting on the smallest
/// remaining entry.
///
/// The divisors come out in increasing divisibility order and are then
/// stably re-sorted largest first, so equal divisors keep the order in
/// which elimination produced them. `h` must be a positive multiple of
/// `det b`.
pub fn snf_with_transforms(b: &IntMatrix, h: &BigInt) -> Result<SnfResult> {
    if !b.is_square() {
        return Err(Error::Dimension(format!("SNF needs a square matrix, got {}x{}", b.rows(), b.cols())));
    }
    if !h.is_positive() {
        return Err(Error::InvalidModulus(format!("determinant multiple must be positive, got {h}")));
    }
    let n = b.rows();
    let mut w = b.clone();
    let mut v = IntMatrix::identity(n);
    let mut u = IntMatrix::identity(n);

    for t in 0..n {
        loop {
            let Some((pi, pj)) = smallest_entry(&w, t) else {
                return Err(Error::Singular);
            };
            w.swap_rows(t, pi);
            v.swap_rows(t, pi);
            w.swap_cols(t, pj);
            u.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..n {
                let q = w[(i, t)].div_floor(&w[(t, t)]);
                if !q.is_zero() {
                    let neg = -q;
                    w.add_row_multiple(i, t, &neg);
                    v.add_row_multiple(i, t, &neg);
                }
                clean &= w[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = w[(t, j)].div_floor(&w[(t, t)]);
                if !q.is_zero() {
                    let neg = -q;
                    w.add_col_multiple(j, t, &neg);
                    u.add_col_multiple(j, t, &neg);
                }
                clean &= w[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = w[(t, t)].clone();
            let offender = (t + 1..n).find(|&i| (t + 1..n).any(|j| !w[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    w.add_row_multiple(t, i, &one);
                    v.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if w[(t, t)].is_negative() {
            w.negate_row(t);
            v.negate_row(t);
        }
    }

    let det: BigInt = (0..n).map(|i| w[(i, i)].clone()).product();
    if !h.is_multiple_of(&det) {
        return Err(Error::InvalidModulus(format!("{h} is not a multiple of |det| = {det}")));
    }

    let mut order: Vec<usize> = (0..n).collect();
    // Stable: ties keep elimination order.
    order.sort_by(|&a, &b| w[(b, b)].cmp(&w[(a, a)]));
    let d: Vec<BigInt> = order.iter().map(|&i| w[(i, i)].clone()).collect();
    Ok(SnfResult { s: IntMatrix::diagonal(&d), u: u.permute_cols(&order), v: v.permute_rows(&order) })
}

fn smallest_entry(w: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let n = w.rows();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if w[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| w[(i, j)].abs() < w[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Elementary divisors of `b` (largest first) computed entirely modulo a
/// positive multiple `h` of `det b`.
///
/// Every intermediate entry is a residue in `[0, h)`. Over `Z/hZ` an entry
/// `x` generates the same ideal as `gcd(x, h)`, so the divisor read off a
/// pivot `x` is `gcd(x, h)`; this equals the integral divisor because each
/// of those divides `det b`, which divides `h`.
pub fn elementary_divisors_modular(b: &IntMatrix, h: &BigInt) -> Result<Vec<BigInt>> {
    if !b.is_square() {
        return Err(Error::Dimension("SNF needs a square matrix".into()));
    }
    if !h.is_positive() {
        return Err(Error::InvalidModulus(format!("modulus must be positive, got {h}")));
    }
    if b.rank() < b.rows() {
        return Err(Error::Singular);
    }
    let n = b.rows();
    let mut w = b.mod_floor(h);
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        while let Some((pi, pj)) = smallest_entry(&w, t) {
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..n {
                let q = w[(i, t)].div_floor(&w[(t, t)]);
                w.add_row_multiple(i, t, &-q);
                for j in t..n {
                    w[(i, j)] = w[(i, j)].mod_floor(h);
                }
                clean &= w[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = w[(t, j)].div_floor(&w[(t, t)]);
                w.add_col_multiple(j, t, &-q);
                for i in t..n {
                    w[(i, j)] = w[(i, j)].mod_floor(h);
                }
                clean &= w[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let g = w[(t, t)].gcd(h);
            let offender = (t + 1..n).find(|&i| (t + 1..n).any(|j| !w[(i, j)].is_multiple_of(&g)));
            match offender {
                Some(i) => {
                    w.add_row_multiple(t, i, &BigInt::one());
                    for j in t..n {
                        w[(t, j)] = w[(t, j)].mod_floor(h);
                    }
                }
                None => break,
            }
        }
        // An all-zero block modulo h means the remaining divisors are h.
        out.push(w[(t, t)].gcd(h));
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Inverse of a unimodular `v` modulo `h >= 2`, by row reduction over
/// `Z/hZ`: Euclidean row combinations clear each column, after which the
/// pivot must be a unit modulo `h`. Entries of the result lie in `[0, h)`.
pub fn inverse_mod(v: &IntMatrix, h: &BigInt) -> Result<IntMatrix> {
    if !v.is_square() {
        return Err(Error::Dimension("inverse needs a square matrix".into()));
    }
    if *h < BigInt::from(2) {
        return Err(Error::InvalidModulus(format!("modulus must be at least 2, got {h}")));
    }
    let n = v.rows();
    let mut a = v.mod_floor(h);
    let mut inv = IntMatrix::identity(n);

    for c in 0..n {
        // Euclid down the column until only row c is nonzero.
        for r in c + 1..n {
            if a[(r, c)].is_zero() {
                continue;
            }
            let (g, x, y) = xgcd(&a[(c, c)], &a[(r, c)]);
            let ad = &a[(c, c)] / &g;
            let bd = &a[(r, c)] / &g;
            combine_rows(&mut a, c, r, [&x, &y, &-&bd, &ad], h);
            combine_rows(&mut inv, c, r, [&x, &y, &-&bd, &ad], h);
        }
        let Some(pinv) = inv_mod(&a[(c, c)], h) else {
            return Err(Error::NotUnimodular(h.clone()));
        };
        scale_row(&mut a, c, &pinv, h);
        scale_row(&mut inv, c, &pinv, h);
        for r in 0..n {
            if r == c || a[(r, c)].is_zero() {
                continue;
            }
            let f = -a[(r, c)].clone();
            a.add_row_multiple(r, c, &f);
            inv.add_row_multiple(r, c, &f);
            reduce_row(&mut a, r, h);
            reduce_row(&mut inv, r, h);
        }
    }
    Ok(inv)
}

/// Replaces rows `(a, b)` by `(x·a + y·b, s·a + t·b)` modulo `h`.
fn combine_rows(m: &mut IntMatrix, a: usize, b: usize, [x, y, s, t]: [&BigInt; 4], h: &BigInt) {
    for j in 0..m.cols() {
        let p = m[(a, j)].clone();
        let q = m[(b, j)].clone();
        m[(a, j)] = (x * &p + y * &q).mod_floor(h);
        m[(b, j)] = (s * &p + t * &q).mod_floor(h);
    }
}

fn scale_row(m: &mut IntMatrix, r: usize, f: &BigInt, h: &BigInt) {
    for j in 0..m.cols() {
        m[(r, j)] = (&m[(r, j)] * f).mod_floor(h);
    }
}

fn reduce_row(m: &mut IntMatrix, r: usize, h: &BigInt) {
    for j in 0..m.cols() {
        m[(r, j)] = m[(r, j)].mod_floor(h);
    }
}
