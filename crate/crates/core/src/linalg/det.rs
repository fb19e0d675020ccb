use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use std::sync::OnceLock;

use super::IntMatrix;
use crate::error::{Error, Result};

/// Upper bound for `|det a|`: the ceiling of the product of the Euclidean
/// row norms. Never less than 1.
pub fn hadamard_bound(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("Hadamard bound needs a square matrix, got {}x{}", a.rows(), a.cols())));
    }
    // ceil(prod sqrt(s_i)) == ceil(sqrt(prod s_i)), so one integer root suffices.
    let product: BigInt = (0..a.rows()).map(|i| a.row(i).iter().map(|x| x * x).sum::<BigInt>()).product();
    let mut root = product.sqrt();
    if &root * &root < product {
        root += 1;
    }
    Ok(root.max(BigInt::one()))
}

/// Incremental stream of primes above a starting point, produced by a
/// segmented sieve of Eratosthenes.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    next_segment: u64,
    pending: std::vec::IntoIter<u64>,
    base: Vec<u64>,
}

const SEGMENT: u64 = 1 << 16;

impl PrimeStream {
    /// Primes strictly greater than `start`. `start` must stay below 2^62
    /// so that residues multiply inside `u128`.
    pub fn above(start: u64) -> Self {
        assert!(start < 1 << 62);
        PrimeStream { next_segment: start + 1, pending: Vec::new().into_iter(), base: vec![] }
    }

    fn ensure_base(&mut self, limit: u64) {
        let have = self.base.last().copied().unwrap_or(1);
        if have >= limit {
            return;
        }
        let limit = (limit + 1).max(2 * have);
        let mut sieve = vec![true; limit as usize + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= limit as usize {
            if sieve[i] {
                for j in (i * i..=limit as usize).step_by(i) {
                    sieve[j] = false;
                }
            }
            i += 1;
        }
        self.base = (0..=limit).filter(|&k| sieve[k as usize]).collect();
    }

    fn fill(&mut self) {
        let lo = self.next_segment;
        let hi = lo + SEGMENT;
        self.ensure_base((hi as f64).sqrt() as u64 + 1);
        let mut flags = vec![true; SEGMENT as usize];
        for &p in &self.base {
            if p * p >= hi {
                break;
            }
            let first = (lo.div_ceil(p) * p).max(p * p);
            let mut m = first;
            while m < hi {
                flags[(m - lo) as usize] = false;
                m += p;
            }
        }
        let primes: Vec<u64> = (lo..hi).filter(|&k| k >= 2 && flags[(k - lo) as usize]).collect();
        self.pending = primes.into_iter();
        self.next_segment = hi;
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if let Some(p) = self.pending.next() {
                return Some(p);
            }
            self.fill();
        }
    }
}

/// Moduli for the residue determinants: primes just above 2^30, so the
/// elimination runs in machine words.
const CRT_PRIMES_START: u64 = 1 << 30;

/// The first CRT moduli, shared by every determinant call.
fn cached_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| PrimeStream::above(CRT_PRIMES_START).take(512).collect())
}

/// Exact signed determinant by Gaussian elimination modulo word-size
/// primes and Chinese remaindering, with enough primes that their product
/// exceeds `2·hadamard_bound + 1`.
pub fn det_modular(a: &IntMatrix) -> Result<BigInt> {
    let bound = hadamard_bound(a)?;
    let target = bound * 2 + 1;
    let cached = cached_primes();
    let last = *cached.last().expect("nonempty prime cache");
    let mut primes = Vec::new();
    let mut product = BigInt::one();
    for p in cached.iter().copied().chain(PrimeStream::above(last)) {
        product *= p;
        primes.push(p);
        if product > target {
            break;
        }
    }
    let residues: Vec<(u64, u64)> = if primes.len() * a.rows() < 64 {
        primes.iter().map(|&p| (p, det_mod_prime(a, p))).collect()
    } else {
        primes.par_iter().map(|&p| (p, det_mod_prime(a, p))).collect()
    };
    // Commutative fold: the result does not depend on the order of residues.
    let (value, modulus) =
        residues.iter().fold((BigInt::zero(), BigInt::one()), |(x, m), &(p, r)| crt_step(&x, &m, r, p));
    let half = &modulus >> 1;
    Ok(if value > half { value - modulus } else { value })
}

/// Combines `x mod m` with `r mod p` into a residue modulo `m·p`.
fn crt_step(x: &BigInt, m: &BigInt, r: u64, p: u64) -> (BigInt, BigInt) {
    let pb = BigInt::from(p);
    let m_mod_p = m.mod_floor(&pb).to_u64().unwrap();
    let x_mod_p = x.mod_floor(&pb).to_u64().unwrap();
    let inv = pow_mod_u64(m_mod_p, p - 2, p);
    let diff = (r + p - x_mod_p) % p;
    let t = mul_mod_u64(diff, inv, p);
    (x + m * t, m * p)
}

fn mul_mod_u64(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod_u64(r, b, p);
        }
        b = mul_mod_u64(b, b, p);
        e >>= 1;
    }
    r
}

/// `det a mod p` for a prime `p < 2^62`.
pub(crate) fn det_mod_prime(a: &IntMatrix, p: u64) -> u64 {
    let n = a.rows();
    let pb = BigInt::from(p);
    let mut m: Vec<u64> = a.entries().iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| m[r * n + c] != 0) else {
            return 0;
        };
        if pr != c {
            for j in 0..n {
                m.swap(pr * n + j, c * n + j);
            }
            det = (p - det) % p;
        }
        let piv = m[c * n + c];
        det = mul_mod_u64(det, piv, p);
        let inv = pow_mod_u64(piv, p - 2, p);
        for r in c + 1..n {
            let f = mul_mod_u64(m[r * n + c], inv, p);
            if f == 0 {
                continue;
            }
            for j in c..n {
                let t = mul_mod_u64(f, m[c * n + j], p);
                m[r * n + j] = (m[r * n + j] + p - t) % p;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_examples() {
        let m = IntMatrix::from_rows([[1, 1], [-1, 1]]).unwrap();
        assert_eq!(hadamard_bound(&m).unwrap(), BigInt::from(2));
        assert_eq!(hadamard_bound(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let m = IntMatrix::from_rows([[3, 0], [0, 4]]).unwrap();
        assert_eq!(hadamard_bound(&m).unwrap(), BigInt::from(12));
        // sqrt(2)*sqrt(5) = 3.16.. -> 4
        let m = IntMatrix::from_rows([[1, 1], [1, 2]]).unwrap();
        assert_eq!(hadamard_bound(&m).unwrap(), BigInt::from(4));
        assert!(hadamard_bound(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn determinant_examples() {
        let m = IntMatrix::from_rows([[1, 1], [-1, 1]]).unwrap();
        assert_eq!(det_modular(&m).unwrap(), BigInt::from(2));
        let m = IntMatrix::from_rows([[2, 4], [-2, 6]]).unwrap();
        assert_eq!(det_modular(&m).unwrap(), BigInt::from(20));
        let m = IntMatrix::from_rows([[0, 1], [1, 0]]).unwrap();
        assert_eq!(det_modular(&m).unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows([[1, 2], [2, 4]]).unwrap();
        assert_eq!(det_modular(&m).unwrap(), BigInt::zero());
    }

    #[test]
    fn prime_stream_matches_trial_division() {
        let got: Vec<u64> = PrimeStream::above(0).take_while(|&p| p < 200_000).collect();
        let want: Vec<u64> =
            (2..200_000u64).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect();
        assert_eq!(got, want);
        let big: Vec<u64> = PrimeStream::above(1 << 30).take(3).collect();
        assert_eq!(big, vec![1073741827, 1073741831, 1073741833]);
    }
}
