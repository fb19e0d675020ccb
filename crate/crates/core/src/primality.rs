//! Deterministic primality testing for arbitrary-precision integers.
//!
//! Below 3,317,044,064,679,887,385,961,981 the Miller-Rabin test with the
//! first thirteen prime bases is exact. Above that bound the default backend
//! runs Miller-Rabin over every base up to `2·ln²n` (Bach's bound, exact
//! under GRH); the AKS backend is unconditional but much slower.

use std::sync::atomic::{AtomicU8, Ordering};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimalityBackend {
    /// Fixed witness set below the published bound, Bach's witness bound above.
    #[default]
    MillerRabin,
    /// Agrawal-Kayal-Saxena above the fixed-witness bound.
    Aks,
}

static BACKEND: AtomicU8 = AtomicU8::new(0);

/// Selects the backend used by [`is_prime_integer`] for large inputs.
pub fn set_backend(backend: PrimalityBackend) {
    BACKEND.store(backend as u8, Ordering::Relaxed);
}

pub fn backend() -> PrimalityBackend {
    match BACKEND.load(Ordering::Relaxed) {
        1 => PrimalityBackend::Aks,
        _ => PrimalityBackend::MillerRabin,
    }
}

const SMALL_PRIMES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Sorenson and Webster: the bases 2..=41 decide every n below this.
const FIXED_WITNESS_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

/// True iff `n` is prime. Negative numbers, 0 and 1 are not prime.
pub fn is_prime_integer(n: &BigInt) -> bool {
    is_prime_with(n, backend())
}

pub fn is_prime_with(n: &BigInt, backend: PrimalityBackend) -> bool {
    let Some(n) = n.to_biguint() else {
        return false;
    };
    if n < BigUint::from(2u32) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == BigUint::from(p) {
            return true;
        }
        if n.is_multiple_of(&BigUint::from(p)) {
            return false;
        }
    }
    if n < BigUint::from(41u32 * 41) {
        return true;
    }
    if n < BigUint::from(FIXED_WITNESS_BOUND) {
        return miller_rabin(&n, SMALL_PRIMES.iter().map(|&b| BigUint::from(b)));
    }
    match backend {
        PrimalityBackend::MillerRabin => {
            let ln = n.bits() as f64 * std::f64::consts::LN_2;
            let limit = (2.0 * ln * ln).ceil() as u64;
            miller_rabin(&n, (2..=limit).map(BigUint::from))
        }
        PrimalityBackend::Aks => aks(&n),
    }
}

/// Strong probable-prime test of odd `n > 2` to every given base.
fn miller_rabin(n: &BigUint, bases: impl Iterator<Item = BigUint>) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for a in bases {
        let a = a % n;
        if a.is_zero() || a == one || a == n_minus_1 {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// `(p, k)` with `n = p^k` and `p` prime, if `n` is a prime power.
pub fn prime_power_root(n: &BigInt) -> Option<(BigInt, u32)> {
    if n < &BigInt::from(2) {
        return None;
    }
    let bits = n.bits() as u32;
    (1..=bits).find_map(|k| {
        let r = n.nth_root(k);
        (r.pow(k) == *n && is_prime_integer(&r)).then_some((r, k))
    })
}

fn perfect_power(n: &BigUint) -> bool {
    (2..=n.bits() as u32).any(|k| n.nth_root(k).pow(k) == *n)
}

/// AKS for `n > 1` with no factor below 42.
fn aks(n: &BigUint) -> bool {
    if perfect_power(n) {
        return false;
    }
    let lg = log2(n);
    let max_k = (lg * lg).floor() as u64;
    let r = (2u64..)
        .find(|&r| {
            if n.gcd(&BigUint::from(r)) != BigUint::one() {
                return false;
            }
            let nr = (n % r).to_u64().unwrap();
            let mut x = 1u64;
            for _ in 1..=max_k {
                x = x * nr % r;
                if x == 1 {
                    return false;
                }
            }
            true
        })
        .expect("some modulus has large order");

    for a in 2..=r {
        let a = BigUint::from(a);
        if &a >= n {
            break;
        }
        let g = a.gcd(n);
        if g != BigUint::one() {
            return false;
        }
    }
    if n <= &BigUint::from(r) {
        return true;
    }

    let limit = ((euler_phi(r) as f64).sqrt() * lg).floor() as u64;
    let rs = r as usize;
    let n_mod_r = (n % r).to_usize().unwrap();
    for a in 1..=limit {
        // (X + a)^n == X^n + a  in  Z_n[X] / (X^r - 1)
        let mut base = vec![BigUint::zero(); rs];
        base[0] = BigUint::from(a) % n;
        base[1 % rs] += BigUint::one();
        let lhs = cyclic_pow(&base, n, n);
        let mut rhs = vec![BigUint::zero(); rs];
        rhs[n_mod_r] = BigUint::one();
        rhs[0] = (&rhs[0] + BigUint::from(a)) % n;
        if lhs != rhs {
            return false;
        }
    }
    true
}

fn log2(n: &BigUint) -> f64 {
    match n.to_f64() {
        Some(f) if f.is_finite() => f.log2(),
        _ => n.bits() as f64,
    }
}

fn euler_phi(mut r: u64) -> u64 {
    let mut result = r;
    let mut p = 2;
    while p * p <= r {
        if r % p == 0 {
            while r % p == 0 {
                r /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if r > 1 {
        result -= result / r;
    }
    result
}

fn cyclic_mul(a: &[BigUint], b: &[BigUint], n: &BigUint) -> Vec<BigUint> {
    let r = a.len();
    let mut out = vec![BigUint::zero(); r];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[(i + j) % r] += x * y;
            }
        }
    }
    for c in &mut out {
        *c %= n;
    }
    out
}

fn cyclic_pow(base: &[BigUint], e: &BigUint, n: &BigUint) -> Vec<BigUint> {
    let mut result = vec![BigUint::zero(); base.len()];
    result[0] = BigUint::one();
    for i in (0..e.bits()).rev() {
        result = cyclic_mul(&result, &result, n);
        if e.bit(i) {
            result = cyclic_mul(&result, base, n);
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn small_cases() {
        assert!(is_prime_integer(&BigInt::from(7)));
        assert!(!is_prime_integer(&BigInt::from(561)));
        assert!(!is_prime_integer(&BigInt::from(1)));
        assert!(is_prime_integer(&BigInt::from(2)));
        assert!(!is_prime_integer(&BigInt::from(0)));
        assert!(!is_prime_integer(&BigInt::from(-7)));
    }

    #[test]
    fn agrees_with_trial_division_below_100k() {
        for n in 0..100_000u64 {
            assert_eq!(is_prime_integer(&BigInt::from(n)), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn large_values() {
        // 2^89 - 1 is a Mersenne prime, 2^67 - 1 is not.
        let m89 = (BigInt::one() << 89) - 1;
        let m67 = (BigInt::one() << 67) - 1;
        assert!(is_prime_with(&m89, PrimalityBackend::MillerRabin));
        assert!(!is_prime_with(&m67, PrimalityBackend::MillerRabin));
        // strong pseudoprime to bases 2..=37 (Arnault-style construction)
        let spsp: BigInt = "3825123056546413051".parse().unwrap();
        assert!(!is_prime_integer(&spsp));
    }

    #[test]
    fn aks_agrees_on_small_inputs() {
        for n in 2..1200u64 {
            assert_eq!(aks(&BigUint::from(n)), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_root(&BigInt::from(64)), Some((BigInt::from(2), 6)));
        assert_eq!(prime_power_root(&BigInt::from(9)), Some((BigInt::from(3), 2)));
        assert_eq!(prime_power_root(&BigInt::from(7)), Some((BigInt::from(7), 1)));
        assert_eq!(prime_power_root(&BigInt::from(12)), None);
        assert_eq!(prime_power_root(&BigInt::from(1)), None);
    }
}
