//! Column-style Hermite normal form.
//!
//! Convention: for an `n x m` matrix `A` of rank `n`, the Hermite form is
//! the `n x n` matrix `H` with `A·U = (0 | H)` for a unimodular `U`, where
//! `H` is upper triangular, `H[i][i] > 0` and `0 <= H[i][j] < H[i][i]` for
//! every `j > i`. The columns of `H` are a basis of the lattice spanned by
//! the columns of `A`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{xgcd, IntMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    /// The `n x n` Hermite form.
    pub h: IntMatrix,
    /// Unimodular `m x m` transform with `A·U = (0 | H)`.
    pub u: IntMatrix,
}

fn check_modulus(h: &BigInt) -> Result<()> {
    if !h.is_positive() {
        return Err(Error::InvalidModulus(format!("determinant multiple must be positive, got {h}")));
    }
    Ok(())
}

/// Hermite form computed with all intermediate arithmetic modulo the
/// determinant multiple `h`.
///
/// `h` must be a positive multiple of the determinant of the lattice
/// spanned by the columns of `a`; the lattice then contains `h·Z^n`, which
/// is what licenses reducing modulo `h`. Processing rows bottom-up, after
/// the pivot `g` of a row is found the remaining sublattice contains
/// `(R/g)·Z^i`, so the working modulus `R` shrinks as the pivots are
/// extracted. Entries never exceed `h`. No transform is produced; see
/// [`hnf_with_transform`] for that.
pub fn hnf_modular(a: &IntMatrix, h: &BigInt) -> Result<IntMatrix> {
    check_modulus(h)?;
    let n = a.rows();
    if a.cols() < n || a.rank() < n {
        return Err(Error::RankDeficient);
    }

    let mut r = h.clone();
    let mut work: Vec<Vec<BigInt>> = a.columns();
    for col in &mut work {
        for x in col.iter_mut() {
            *x = x.mod_floor(&r);
        }
    }
    let mut basis: Vec<Vec<BigInt>> = vec![Vec::new(); n];

    for i in (0..n).rev() {
        // Gather the row-i content into a single working column.
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::with_capacity(work.len());
        for mut col in work.drain(..) {
            if col[i].is_zero() {
                rest.push(col);
                continue;
            }
            let Some(mut piv) = pivot.take() else {
                pivot = Some(col);
                continue;
            };
            let (d, u, v) = xgcd(&piv[i], &col[i]);
            let ad = &piv[i] / &d;
            let bd = &col[i] / &d;
            for k in 0..=i {
                let x = &piv[k];
                let y = &col[k];
                let new_piv = (&u * x + &v * y).mod_floor(&r);
                let new_col = (&ad * y - &bd * x).mod_floor(&r);
                piv[k] = new_piv;
                col[k] = new_col;
            }
            if col.iter().any(|x| !x.is_zero()) {
                rest.push(col);
            }
            pivot = Some(piv);
        }
        work = rest;

        let piv = pivot.unwrap_or_else(|| vec![BigInt::zero(); n]);
        // Combine with r·e_i, which lies in the current sublattice.
        let (g, u, _) = xgcd(&piv[i], &r);
        let mut column = vec![BigInt::zero(); n];
        for k in 0..i {
            column[k] = (&u * &piv[k]).mod_floor(&r);
        }
        column[i] = g.clone();
        basis[i] = column;

        r = &r / &g;
        for col in &mut work {
            for x in col.iter_mut().take(i) {
                *x = x.mod_floor(&r);
            }
        }
    }

    let mut out = IntMatrix::from_columns(&basis)?;
    reduce_above_diagonal(&mut out, None);
    Ok(out)
}

/// Brings row `i` entries right of the diagonal into `[0, H[i][i])`,
/// processing rows bottom-up so finished rows are never disturbed. When a
/// transform is given, the same column operations are applied to its last
/// `n` columns.
fn reduce_above_diagonal(h: &mut IntMatrix, mut transform: Option<(&mut IntMatrix, usize)>) {
    let n = h.rows();
    for i in (0..n).rev() {
        for j in i + 1..n {
            let q = h[(i, j)].div_floor(&h[(i, i)]);
            if q.is_zero() {
                continue;
            }
            let neg = -q;
            h.add_col_multiple(j, i, &neg);
            if let Some((u, offset)) = transform.as_mut() {
                u.add_col_multiple(*offset + j, *offset + i, &neg);
            }
        }
    }
}

/// Hermite form together with a unimodular transform, by extended-gcd
/// column elimination over the integers.
///
/// `h` must be a positive multiple of the lattice determinant; a result
/// whose determinant does not divide `h` is reported as
/// [`Error::InvalidModulus`].
pub fn hnf_with_transform(a: &IntMatrix, h: &BigInt) -> Result<HnfResult> {
    check_modulus(h)?;
    let n = a.rows();
    let m = a.cols();
    if m < n {
        return Err(Error::RankDeficient);
    }
    let mut w = a.clone();
    let mut u = IntMatrix::identity(m);

    // Column `k` receives the pivot of row `i`.
    for (step, i) in (0..n).rev().enumerate() {
        let k = m - 1 - step;
        for j in 0..k {
            if w[(i, j)].is_zero() {
                continue;
            }
            if w[(i, k)].is_zero() {
                w.swap_cols(j, k);
                u.swap_cols(j, k);
                continue;
            }
            let (d, x, y) = xgcd(&w[(i, k)], &w[(i, j)]);
            let ad = &w[(i, k)] / &d;
            let bd = &w[(i, j)] / &d;
            // (k, j) <- (x·k + y·j, ad·j - bd·k); determinant x·ad + y·bd = 1.
            let coeffs = [&x, &y, &-&bd, &ad];
            w.combine_cols(k, j, coeffs);
            u.combine_cols(k, j, coeffs);
        }
        if w[(i, k)].is_zero() {
            return Err(Error::RankDeficient);
        }
        if w[(i, k)].is_negative() {
            w.negate_col(k);
            u.negate_col(k);
        }
        // Keep the finished pivot columns small.
        for j in k + 1..m {
            let q = w[(i, j)].div_floor(&w[(i, k)]);
            if !q.is_zero() {
                let neg = -q;
                w.add_col_multiple(j, k, &neg);
                u.add_col_multiple(j, k, &neg);
            }
        }
    }

    let mut hm = w.column_range(m - n, m);
    reduce_above_diagonal(&mut hm, Some((&mut u, m - n)));
    let det: BigInt = (0..n).map(|i| hm[(i, i)].clone()).product();
    if !h.is_multiple_of(&det) {
        return Err(Error::InvalidModulus(format!("{h} is not a multiple of the lattice determinant {det}")));
    }
    debug_assert!(m == n || w.column_range(0, m - n).is_zero());
    Ok(HnfResult { h: hm, u })
}

/// Checks the shape constraints of the Hermite convention.
pub fn is_hermite_form(h: &IntMatrix) -> bool {
    let n = h.rows();
    h.is_square()
        && (0..n).all(|i| {
            h[(i, i)].is_positive()
                && (0..i).all(|j| h[(i, j)].is_zero())
                && (i + 1..n).all(|j| !h[(i, j)].is_negative() && h[(i, j)] < h[(i, i)])
        })
}

impl HnfResult {
    /// Verifies `A·U = (0 | H)` exactly and the Hermite shape of `H`.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let n = a.rows();
        let m = a.cols();
        let Ok(au) = a.checked_mul(&self.u) else {
            return false;
        };
        let zero_ok = m == n || au.column_range(0, m - n).is_zero();
        zero_ok && au.column_range(m - n, m) == self.h && is_hermite_form(&self.h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m<const R: usize, const C: usize>(rows: [[i64; C]; R]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn det_two_lattice() {
        let a = m([[1, -1], [1, 1]]);
        let want = m([[2, 1], [0, 1]]);
        let r = hnf_with_transform(&a, &BigInt::from(2)).unwrap();
        assert_eq!(r.h, want);
        assert!(r.verify(&a));
        assert_eq!(hnf_modular(&a, &BigInt::from(2)).unwrap(), want);
        assert_eq!(hnf_modular(&a, &BigInt::from(6)).unwrap(), want);
    }

    #[test]
    fn already_hermite() {
        let a = m([[2, 0], [0, 2]]);
        let r = hnf_with_transform(&a, &BigInt::from(4)).unwrap();
        assert_eq!(r.h, a);
        assert_eq!(r.u, IntMatrix::identity(2));
        assert_eq!(hnf_modular(&a, &BigInt::from(4)).unwrap(), a);
    }

    #[test]
    fn block_of_two_principal_ideals() {
        // (H_A | H_B) for alpha = 1+i, beta = 2 in Z[i]
        let a = m([[2, 1, 2, 0], [0, 1, 0, 2]]);
        let r = hnf_with_transform(&a, &BigInt::from(8)).unwrap();
        assert_eq!(r.h, m([[2, 1], [0, 1]]));
        assert!(r.verify(&a));
        assert_eq!(hnf_modular(&a, &BigInt::from(8)).unwrap(), r.h);
    }

    #[test]
    fn rank_deficiency_detected() {
        let a = m([[1, 2, 3], [2, 4, 6]]);
        assert_eq!(hnf_with_transform(&a, &BigInt::from(6)), Err(Error::RankDeficient));
        assert_eq!(hnf_modular(&a, &BigInt::from(6)), Err(Error::RankDeficient));
        let z = IntMatrix::zeros(2, 2);
        assert_eq!(hnf_modular(&z, &BigInt::from(1)), Err(Error::RankDeficient));
    }

    #[test]
    fn wrong_modulus_reported() {
        let a = m([[3, 0], [0, 1]]);
        assert!(matches!(hnf_with_transform(&a, &BigInt::from(2)), Err(Error::InvalidModulus(_))));
        assert!(hnf_modular(&a, &BigInt::zero()).is_err());
    }

    #[test]
    fn zero_columns_permitted() {
        let a = m([[0, 3, 0, 1], [0, 0, 0, 5]]);
        let r = hnf_with_transform(&a, &BigInt::from(15)).unwrap();
        assert!(r.verify(&a));
        assert_eq!(r.h, m([[3, 1], [0, 5]]));
        assert_eq!(hnf_modular(&a, &BigInt::from(15)).unwrap(), r.h);
    }
}
