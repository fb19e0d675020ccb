//! Dense linear algebra over a prime field `Z/pZ`, entries kept as
//! arbitrary-precision residues in `[0, p)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::xgcd;

/// 2^61 - 1.
pub const LARGE_PRIME: u64 = 2_305_843_009_213_693_951;

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, u, _) = xgcd(&a.mod_floor(m), m);
    g.is_one().then(|| u.mod_floor(m))
}

/// Reduces `a` in place to reduced row echelon form modulo the prime `p`
/// and returns the pivot columns.
pub fn rref(a: &mut [Vec<BigInt>], p: &BigInt) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = x.mod_floor(p);
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(&a[r][c], p).expect("nonzero residue modulo a prime");
        for x in a[r].iter_mut() {
            *x = (&*x * &inv).mod_floor(p);
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let t = (&a[i][j] - &f * &a[r][j]).mod_floor(p);
                a[i][j] = t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_mod(a: &[Vec<BigInt>], p: &BigInt) -> usize {
    let mut a = a.to_vec();
    rref(&mut a, p).len()
}

/// One solution of `a · x = b` over `Z/pZ` (free variables set to zero).
pub fn solve_mod(a: &[Vec<BigInt>], b: &[BigInt], p: &BigInt) -> Option<Vec<BigInt>> {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![BigInt::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right kernel `{x : a · x = 0}` over `Z/pZ`.
pub fn kernel_mod(a: &[Vec<BigInt>], cols: usize, p: &BigInt) -> Vec<Vec<BigInt>> {
    let mut r = a.to_vec();
    let pivots = rref(&mut r, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigInt::zero(); cols];
            v[f] = BigInt::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (-&r[row][f]).mod_floor(p);
            }
            v
        })
        .collect()
}

/// Matrix product modulo `p`.
pub fn mat_mul_mod(a: &[Vec<BigInt>], b: &[Vec<BigInt>], p: &BigInt) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][t] * &b[t][j];
            }
        }
        for x in out[i].iter_mut() {
            *x = x.mod_floor(p);
        }
    }
    out
}
