//! Brute-force reference implementations for small instances: exhaustive
//! quotient rings, Bareiss determinants and lattice membership. These share
//! no arithmetic with the main path beyond reducing an ideal lattice to its
//! Hermite basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{hnf_with_transform, IntMatrix};
use crate::order::{OrderPresentation, TwoGenIdeal};
use crate::ring::FiniteRingPresentation;

pub const DEFAULT_CAP: usize = 4096;

/// Largest supported cap; keeps all oracle arithmetic inside `i128`.
pub const MAX_CAP: usize = 1 << 20;

const MAX_CONSTANT: i128 = 1 << 40;

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("determinant of a {}x{} matrix", a.rows(), a.cols())));
    }
    let n = a.rows();
    let mut m = a.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(sign * &m[n - 1][n - 1])
}

fn small(x: &BigInt, what: &str) -> Result<i128> {
    x.to_i128()
        .filter(|v| v.abs() <= MAX_CONSTANT)
        .ok_or_else(|| Error::Format(format!("{what} {x} is too large for the enumeration oracle")))
}

#[derive(Debug, Clone)]
enum Multiplication {
    /// Products in the order, reduced modulo an upper-triangular lattice
    /// basis given by its columns.
    Quotient { n: usize, table: Vec<i128>, basis: Vec<Vec<i128>> },
    /// Structure constants of a presentation.
    Presentation { m: usize, l: Vec<i128> },
}

/// Every element of a small finite ring, indexed in mixed radix.
#[derive(Debug, Clone)]
pub struct EnumeratedRing {
    radix: Vec<i128>,
    mult: Multiplication,
    one: Option<usize>,
}

impl EnumeratedRing {
    pub fn len(&self) -> usize {
        self.radix.iter().product::<i128>() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero_ring(&self) -> bool {
        self.len() == 1
    }

    /// Coordinates of the element with the given index.
    pub fn element(&self, mut idx: usize) -> Vec<i128> {
        self.radix
            .iter()
            .map(|&r| {
                let c = idx % r as usize;
                idx /= r as usize;
                c as i128
            })
            .collect()
    }

    fn index(&self, coords: &[i128]) -> usize {
        let mut idx = 0usize;
        for (c, r) in coords.iter().zip(&self.radix).rev() {
            idx = idx * *r as usize + *c as usize;
        }
        idx
    }

    fn reduce(&self, mut v: Vec<i128>) -> Vec<i128> {
        match &self.mult {
            Multiplication::Quotient { basis, .. } => {
                for i in (0..v.len()).rev() {
                    let q = v[i].div_euclid(basis[i][i]);
                    if q != 0 {
                        for (x, b) in v.iter_mut().zip(&basis[i]) {
                            *x -= q * b;
                        }
                    }
                }
                v
            }
            Multiplication::Presentation { .. } => v.iter().zip(&self.radix).map(|(x, r)| x.rem_euclid(*r)).collect(),
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let v = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        self.index(&self.reduce(v))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let (k_len, table) = match &self.mult {
            Multiplication::Quotient { n, table, .. } => (*n, table),
            Multiplication::Presentation { m, l } => (*m, l),
        };
        let mut out = vec![0i128; k_len];
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if *yj == 0 {
                    continue;
                }
                let base = (i * k_len + j) * k_len;
                for (k, o) in out.iter_mut().enumerate() {
                    *o += xi * yj * table[base + k];
                }
            }
            // keep the accumulator bounded
            out = self.reduce(out);
        }
        self.index(&self.reduce(out))
    }

    /// Index of the multiplicative identity, if there is one.
    pub fn one(&self) -> Option<usize> {
        self.one
    }

    /// `unit[x]` is true iff `x` has a multiplicative inverse.
    pub fn units(&self) -> Vec<bool> {
        self.scan_units(false).0
    }

    /// Marks units; with `stop_at_zero_divisor`, stops at the first nonzero
    /// non-unit and reports it.
    fn scan_units(&self, stop_at_zero_divisor: bool) -> (Vec<bool>, Option<usize>) {
        let n = self.len();
        let Some(one) = self.one else {
            return (vec![false; n], None);
        };
        let mut unit = vec![false; n];
        for a in 0..n {
            if unit[a] {
                continue;
            }
            let Some(b) = (0..n).find(|&b| self.mul(a, b) == one) else {
                if stop_at_zero_divisor && a != 0 {
                    return (unit, Some(a));
                }
                continue;
            };
            // every power of a unit is a unit, inverted by the same power of b
            let (mut x, mut y) = (a, b);
            loop {
                unit[x] = true;
                unit[y] = true;
                x = self.mul(x, a);
                y = self.mul(y, b);
                if x == one {
                    break;
                }
            }
            unit[one] = true;
        }
        (unit, None)
    }

    /// `table[a][b]` is the index of `a·b`.
    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn addition_table(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n).map(|a| (0..n).map(|b| self.add(a, b)).collect()).collect()
    }

    /// Elements whose additive order is exactly `k`.
    pub fn count_of_additive_order(&self, k: usize) -> usize {
        (0..self.len())
            .filter(|&a| {
                let mut x = 0usize;
                let mut order = 0;
                loop {
                    x = self.add(x, a);
                    order += 1;
                    if x == 0 {
                        break;
                    }
                }
                order == k
            })
            .count()
    }

    fn find_one(&mut self) {
        let n = self.len();
        self.one = (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x));
    }
}

fn check_cap(size: &BigInt, cap: usize) -> Result<()> {
    if cap > MAX_CAP || size > &BigInt::from(cap) {
        return Err(Error::CapExceeded { size: size.clone(), cap: cap.min(MAX_CAP) });
    }
    Ok(())
}

/// Regular representation rows `x·ω_i`, computed directly from the table.
fn multiplication_matrix(order: &OrderPresentation, x: &[BigInt]) -> IntMatrix {
    let n = order.rank();
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = (0..n).map(|k| &x[k] * order.c(k, i, j)).sum();
        }
    }
    a
}

/// `O/I` by exhaustion. Fails if `N(I)` exceeds `cap`.
pub fn enumerate_quotient(order: &OrderPresentation, ideal: &TwoGenIdeal, cap: usize) -> Result<EnumeratedRing> {
    let n = order.rank();
    let mut columns = Vec::new();
    let mut det_multiple = BigInt::one();
    for x in [&ideal.alpha, &ideal.beta] {
        if x.is_zero() {
            continue;
        }
        let a = multiplication_matrix(order, &x.coords);
        let d = bareiss_det(&a)?.abs();
        if d.is_zero() {
            return Err(Error::NotADomain(format!("nonzero element {x} has norm 0")));
        }
        det_multiple *= d;
        columns.extend(a.to_rows());
    }
    // columns of the generator matrix are the coordinates of x·ω_i
    let gens = IntMatrix::from_columns(&columns)?;
    let hnf = hnf_with_transform(&gens, &det_multiple)?.h;
    let size: BigInt = (0..n).map(|i| hnf[(i, i)].clone()).product();
    check_cap(&size, cap)?;
    let basis: Vec<Vec<i128>> =
        (0..n).map(|j| (0..n).map(|i| small(&hnf[(i, j)], "lattice entry")).collect()).collect::<Result<_>>()?;
    let table = (0..n * n * n)
        .map(|idx| small(order.c(idx / (n * n), (idx / n) % n, idx % n), "table entry"))
        .collect::<Result<_>>()?;
    let one: Vec<i128> = order.one().coords.iter().map(|c| small(c, "identity coordinate")).collect::<Result<_>>()?;
    let radix = (0..n).map(|i| basis[i][i]).collect();
    let mut ring = EnumeratedRing { radix, mult: Multiplication::Quotient { n, table, basis }, one: None };
    let one = ring.reduce(one);
    ring.one = Some(ring.index(&one));
    Ok(ring)
}

/// A presentation by exhaustion. Fails if `∏ d_i` exceeds `cap`.
pub fn enumerate_presentation(ring: &FiniteRingPresentation, cap: usize) -> Result<EnumeratedRing> {
    let size = ring.size();
    check_cap(&size, cap)?;
    let m = ring.m();
    let radix = ring.moduli().iter().map(|d| small(d, "modulus")).collect::<Result<_>>()?;
    let mut l = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                l.push(small(ring.constant(i, j, k), "structure constant")?);
            }
        }
    }
    let mut e = EnumeratedRing { radix, mult: Multiplication::Presentation { m, l }, one: None };
    e.find_one();
    Ok(e)
}

/// Every nonzero element is invertible (and `1 != 0`).
pub fn oracle_is_field(e: &EnumeratedRing) -> bool {
    if e.is_zero_ring() || e.one().is_none() {
        return false;
    }
    e.scan_units(true).1.is_none()
}

/// The non-units form an ideal (and `1 != 0`).
pub fn oracle_is_local(e: &EnumeratedRing) -> bool {
    if e.is_zero_ring() || e.one().is_none() {
        return false;
    }
    let units = e.units();
    let non_units: Vec<usize> = (0..e.len()).filter(|&x| !units[x]).collect();
    for &a in &non_units {
        for &b in &non_units {
            if units[e.add(a, b)] {
                return false;
            }
        }
        for r in 0..e.len() {
            if units[e.mul(a, r)] {
                return false;
            }
        }
    }
    true
}

/// All combinations `Σ c_j g_j` of the columns of `gens` with
/// `|c_j| <= radius`.
pub fn lattice_points_in_box(gens: &IntMatrix, radius: i64) -> Vec<Vec<BigInt>> {
    let cols = gens.columns();
    let mut points = vec![vec![BigInt::zero(); gens.rows()]];
    for col in &cols {
        let mut next = Vec::with_capacity(points.len() * (2 * radius as usize + 1));
        for p in &points {
            for c in -radius..=radius {
                next.push(p.iter().zip(col).map(|(x, g)| x + g * c).collect());
            }
        }
        points = next;
    }
    points
}

/// Membership in the lattice spanned by the columns of an upper-triangular
/// matrix with nonzero diagonal, by back substitution.
pub fn triangular_lattice_contains(h: &IntMatrix, x: &[BigInt]) -> bool {
    let n = h.rows();
    let mut v = x.to_vec();
    for i in (0..n).rev() {
        let (q, r) = v[i].div_rem(&h[(i, i)]);
        if !r.is_zero() {
            return false;
        }
        for (k, vk) in v.iter_mut().enumerate().take(i + 1) {
            *vk -= &q * &h[(k, i)];
        }
    }
    v.iter().all(Zero::is_zero)
}
