//! Multiplication tables of small rings of integers, used by tests,
//! benchmarks and the command-line examples.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::order::OrderPresentation;

/// `Z[θ]` for `θ` a root of the monic `x^n + c_{n-1}x^{n-1} + … + c_0`,
/// given `coeffs = [c_0, …, c_{n-1}]`, on the basis `1, θ, …, θ^{n-1}`.
pub fn power_basis(coeffs: &[i64]) -> OrderPresentation {
    let n = coeffs.len();
    assert!(n >= 1, "polynomial of degree at least 1");
    // powers θ^0..θ^{2n-2} in coordinates
    let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(2 * n - 1);
    for e in 0..2 * n - 1 {
        let v = if e < n {
            let mut v = vec![BigInt::zero(); n];
            v[e] = BigInt::one();
            v
        } else {
            // θ·θ^{e-1}
            let prev = &powers[e - 1];
            let mut v = vec![BigInt::zero(); n];
            v[1..n].clone_from_slice(&prev[..n - 1]);
            let top = &prev[n - 1];
            for (k, c) in coeffs.iter().enumerate() {
                v[k] -= top * c;
            }
            v
        };
        powers.push(v);
    }
    let mut table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            table.extend(powers[i + j].iter().cloned());
        }
    }
    let mut one = vec![BigInt::zero(); n];
    one[0] = BigInt::one();
    OrderPresentation::new(n, table, one).expect("consistent shapes")
}

/// `Z`, rank one.
pub fn integers() -> OrderPresentation {
    OrderPresentation::new(1, vec![BigInt::one()], vec![BigInt::one()]).expect("consistent shapes")
}

/// `Z[i]`, `i² = -1`.
pub fn gaussian() -> OrderPresentation {
    power_basis(&[1, 0])
}

/// `Z[√-2]`.
pub fn sqrt_minus2() -> OrderPresentation {
    power_basis(&[2, 0])
}

/// `Z[√-5]`, class number two.
pub fn sqrt_minus5() -> OrderPresentation {
    power_basis(&[5, 0])
}

/// `Z[ω]`, `ω² = -1 - ω`.
pub fn eisenstein() -> OrderPresentation {
    power_basis(&[1, 1])
}

/// `Z[θ]`, `θ³ = θ + 1` (discriminant -23).
pub fn cubic_23() -> OrderPresentation {
    power_basis(&[-1, -1, 0])
}

/// `Z[ζ_8]`, `ζ⁴ = -1`.
pub fn cyclotomic8() -> OrderPresentation {
    power_basis(&[1, 0, 0, 0])
}

/// Every named fixture with a short name.
pub fn all() -> Vec<(&'static str, OrderPresentation)> {
    vec![
        ("integers", integers()),
        ("gaussian", gaussian()),
        ("sqrt-2", sqrt_minus2()),
        ("sqrt-5", sqrt_minus5()),
        ("eisenstein", eisenstein()),
        ("cubic-23", cubic_23()),
        ("cyclotomic8", cyclotomic8()),
    ]
}

pub fn by_name(name: &str) -> Option<OrderPresentation> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, o)| o)
}
