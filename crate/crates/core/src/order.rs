//! Orders of finite rank given by a multiplication table
//! `ω_i ω_j = Σ_k c_ijk ω_k`, their elements and two-generated ideals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_modular, hnf_modular, IntMatrix};

#[derive(Clone, PartialEq, Eq)]
pub struct OrderPresentation {
    n: usize,
    /// `table[(i*n + j)*n + k] = c_ijk`
    table: Vec<BigInt>,
    one: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderElement {
    pub coords: Vec<BigInt>,
}

impl OrderElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        OrderElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        OrderElement { coords: coords.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn max_abs(&self) -> BigInt {
        self.coords.iter().map(BigInt::abs).max().unwrap_or_default()
    }
}

impl fmt::Display for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A failed ring identity, with 0-based witnessing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderViolation {
    Commutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, k: usize },
    Identity { i: usize },
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::Commutativity { i, j } => {
                write!(f, "w{}*w{} != w{}*w{}", i + 1, j + 1, j + 1, i + 1)
            }
            OrderViolation::Associativity { i, j, k } => {
                write!(f, "(w{a}*w{b})*w{c} != w{a}*(w{b}*w{c})", a = i + 1, b = j + 1, c = k + 1)
            }
            OrderViolation::Identity { i } => write!(f, "one*w{} != w{}", i + 1, i + 1),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<OrderViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl OrderPresentation {
    /// Flat table indexed `(i*n + j)*n + k`. Only shapes are checked here.
    pub fn new(n: usize, table: Vec<BigInt>, one: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("rank must be at least 1".into()));
        }
        if table.len() != n * n * n {
            return Err(Error::Dimension(format!(
                "{} table entries for rank {n}, expected {}",
                table.len(),
                n * n * n
            )));
        }
        if one.len() != n {
            return Err(Error::Dimension(format!("identity has {} coordinates, rank is {n}", one.len())));
        }
        Ok(OrderPresentation { n, table, one })
    }

    pub fn from_nested(table: Vec<Vec<Vec<BigInt>>>, one: Vec<BigInt>) -> Result<Self> {
        let n = table.len();
        if table.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::Dimension(format!("multiplication table is not {n}x{n}x{n}")));
        }
        Self::new(n, table.into_iter().flatten().flatten().collect(), one)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.table[(i * self.n + j) * self.n + k]
    }

    pub fn table_nested(&self) -> Vec<Vec<Vec<BigInt>>> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| self.c(i, j, k).clone()).collect()).collect()).collect()
    }

    pub fn one(&self) -> OrderElement {
        OrderElement { coords: self.one.clone() }
    }

    pub fn basis_element(&self, i: usize) -> OrderElement {
        let mut coords = vec![BigInt::zero(); self.n];
        coords[i] = BigInt::one();
        OrderElement { coords }
    }

    /// Integer multiple of the identity.
    pub fn scalar(&self, c: &BigInt) -> OrderElement {
        OrderElement { coords: self.one.iter().map(|x| x * c).collect() }
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<OrderElement> {
        let x = OrderElement { coords };
        self.check(&x)?;
        Ok(x)
    }

    /// Largest absolute value in the table.
    pub fn table_bound(&self) -> BigInt {
        self.table.iter().map(BigInt::abs).max().unwrap_or_default()
    }

    fn check(&self, x: &OrderElement) -> Result<()> {
        if x.coords.len() != self.n {
            return Err(Error::Dimension(format!(
                "element has {} coordinates, order has rank {}",
                x.coords.len(),
                self.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, x: &OrderElement, y: &OrderElement) -> Result<OrderElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(OrderElement { coords: x.coords.iter().zip(&y.coords).map(|(a, b)| a + b).collect() })
    }

    pub fn neg(&self, x: &OrderElement) -> Result<OrderElement> {
        self.check(x)?;
        Ok(OrderElement { coords: x.coords.iter().map(|a| -a).collect() })
    }

    pub fn sub(&self, x: &OrderElement, y: &OrderElement) -> Result<OrderElement> {
        self.add(x, &self.neg(y)?)
    }

    pub fn mul(&self, x: &OrderElement, y: &OrderElement) -> Result<OrderElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &OrderElement, y: &OrderElement) -> OrderElement {
        let n = self.n;
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.table[base + k];
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        OrderElement { coords: out }
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if (0..n).any(|k| self.c(i, j, k) != self.c(j, i, k)) {
                    violations.push(OrderViolation::Commutativity { i, j });
                }
            }
        }
        let basis: Vec<OrderElement> = (0..n).map(|i| self.basis_element(i)).collect();
        let products: Vec<Vec<OrderElement>> =
            (0..n).map(|i| (0..n).map(|j| self.mul_unchecked(&basis[i], &basis[j])).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_unchecked(&products[i][j], &basis[k]);
                    let right = self.mul_unchecked(&basis[i], &products[j][k]);
                    if left != right {
                        violations.push(OrderViolation::Associativity { i, j, k });
                    }
                }
            }
        }
        let one = self.one();
        for (i, b) in basis.iter().enumerate() {
            if self.mul_unchecked(&one, b) != *b {
                violations.push(OrderViolation::Identity { i });
            }
        }
        ValidationReport { violations }
    }

    /// Row `i` holds the coordinates of `x·ω_i`:
    /// `a_ij = Σ_k x_k c_kij`.
    pub fn regular_representation(&self, x: &OrderElement) -> Result<IntMatrix> {
        self.check(x)?;
        let n = self.n;
        let mut a = IntMatrix::zeros(n, n);
        for (k, xk) in x.coords.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let c = self.c(k, i, j);
                    if !c.is_zero() {
                        a[(i, j)] += xk * c;
                    }
                }
            }
        }
        Ok(a)
    }

    /// `|det|` of the regular representation.
    pub fn element_norm(&self, x: &OrderElement) -> Result<BigInt> {
        Ok(det_modular(&self.regular_representation(x)?)?.abs())
    }
}

impl fmt::Debug for OrderPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderPresentation")
            .field("n", &self.n)
            .field("table", &self.table.iter().map(ToString::to_string).collect::<Vec<_>>())
            .field("one", &self.one.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}

/// `I = Oα + Oβ`, not both zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGenIdeal {
    pub alpha: OrderElement,
    pub beta: OrderElement,
}

impl TwoGenIdeal {
    pub fn new(alpha: OrderElement, beta: OrderElement) -> Result<Self> {
        if alpha.coords.len() != beta.coords.len() {
            return Err(Error::Dimension("generators of different lengths".into()));
        }
        if alpha.is_zero() && beta.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(TwoGenIdeal { alpha, beta })
    }

    pub fn principal(x: OrderElement) -> Result<Self> {
        Self::new(x.clone(), x)
    }

    /// The nonzero generators.
    pub fn generators(&self) -> Vec<&OrderElement> {
        [&self.alpha, &self.beta].into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn max_abs(&self) -> BigInt {
        self.alpha.max_abs().max(self.beta.max_abs())
    }
}

/// Hermite basis of an ideal lattice (columns are ω-coordinates of a
/// Z-basis) together with the ideal norm `det H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub hnf: IntMatrix,
    pub norm: BigInt,
}

fn nonzero_norm(order: &OrderPresentation, x: &OrderElement) -> Result<BigInt> {
    let norm = order.element_norm(x)?;
    if norm.is_zero() {
        return Err(Error::NotADomain(format!("nonzero element {x} has norm 0")));
    }
    Ok(norm)
}

/// `h = N(α)·N(β)`, or the norm of the only nonzero generator.
pub fn norm_multiple(order: &OrderPresentation, ideal: &TwoGenIdeal) -> Result<BigInt> {
    let mut h = BigInt::one();
    for x in ideal.generators() {
        h *= nonzero_norm(order, x)?;
    }
    Ok(h)
}

/// Rejects a user-supplied `h` unless it is positive and divisible by the
/// norm of each nonzero generator.
pub fn check_norm_multiple(order: &OrderPresentation, ideal: &TwoGenIdeal, h: &BigInt) -> Result<()> {
    if !h.is_positive() {
        return Err(Error::InvalidModulus(format!("h = {h} must be positive")));
    }
    for x in ideal.generators() {
        let norm = nonzero_norm(order, x)?;
        if !h.is_multiple_of(&norm) {
            return Err(Error::InvalidModulus(format!("N({x}) = {norm} does not divide h = {h}")));
        }
    }
    Ok(())
}

/// Coefficient bound `T`: largest absolute value among the table entries
/// and the generator coordinates.
pub fn coefficient_bound(order: &OrderPresentation, ideal: &TwoGenIdeal) -> BigInt {
    order.table_bound().max(ideal.max_abs()).max(BigInt::one())
}

/// Whether `h <= n^(7n/2)·T^(4n)`, compared after squaring.
pub fn within_norm_bound(order: &OrderPresentation, ideal: &TwoGenIdeal, h: &BigInt) -> bool {
    let n = order.rank() as u32;
    let t = coefficient_bound(order, ideal);
    h * h <= BigInt::from(n).pow(7 * n) * t.pow(8 * n)
}

/// Hermite basis of the principal ideal `Ox`, `x` nonzero.
fn principal_hnf(order: &OrderPresentation, x: &OrderElement, modulus: &BigInt) -> Result<IntMatrix> {
    let a = order.regular_representation(x)?.transpose();
    hnf_modular(&a, modulus)
}

fn combined_basis(blocks: &[IntMatrix], h: &BigInt) -> Result<IdealBasis> {
    let mut m = blocks[0].clone();
    for b in &blocks[1..] {
        m = m.hstack(b)?;
    }
    let hnf = if blocks.len() == 1 { m } else { hnf_modular(&m, h)? };
    let norm = (0..hnf.rows()).map(|i| hnf[(i, i)].clone()).product();
    Ok(IdealBasis { hnf, norm })
}

/// `H_M = HNF(HNF(A^T) | HNF(B^T))` and `N(I) = det H_M`, where `h` is a
/// positive multiple of the generator norms.
pub fn ideal_hnf_basis(order: &OrderPresentation, ideal: &TwoGenIdeal, h: &BigInt) -> Result<IdealBasis> {
    if !h.is_positive() {
        return Err(Error::InvalidModulus(format!("h = {h} must be positive")));
    }
    let blocks = ideal
        .generators()
        .into_iter()
        .map(|x| {
            nonzero_norm(order, x)?;
            principal_hnf(order, x, h)
        })
        .collect::<Result<Vec<_>>>()?;
    combined_basis(&blocks, h)
}

/// Hermite basis of `IJ`, generated by the four generator products.
pub fn ideal_product(order: &OrderPresentation, i: &TwoGenIdeal, j: &TwoGenIdeal) -> Result<IdealBasis> {
    let mut products = Vec::new();
    for x in i.generators() {
        for y in j.generators() {
            let xy = order.mul(x, y)?;
            if !products.contains(&xy) {
                products.push(xy);
            }
        }
    }
    let mut h = None;
    let mut blocks = Vec::new();
    for xy in &products {
        let norm = nonzero_norm(order, xy)?;
        blocks.push(principal_hnf(order, xy, &norm)?);
        h.get_or_insert(norm);
    }
    combined_basis(&blocks, &h.expect("nonzero ideals have a nonzero product"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn el(c: &[i64]) -> OrderElement {
        OrderElement::from_i64(c)
    }

    fn ideal(a: &[i64], b: &[i64]) -> TwoGenIdeal {
        TwoGenIdeal::new(el(a), el(b)).unwrap()
    }

    #[test]
    fn validation() {
        assert!(fixtures::gaussian().validate().is_valid());
        let o = fixtures::gaussian();
        let mut t = o.table_nested();
        t[0][1][0] = -t[0][1][0].clone() + 1;
        let bad = OrderPresentation::from_nested(t, o.one().coords).unwrap();
        let report = bad.validate();
        assert!(report.violations.contains(&OrderViolation::Commutativity { i: 0, j: 1 }));
        // i·i = +1 is still a ring
        let split = fixtures::power_basis(&[-1, 0]);
        assert!(split.validate().is_valid());
        let wrong_one = OrderPresentation::new(
            2,
            o.table_nested().into_iter().flatten().flatten().collect(),
            vec![0.into(), 1.into()],
        )
        .unwrap();
        assert!(wrong_one.validate().violations.contains(&OrderViolation::Identity { i: 0 }));
    }

    #[test]
    fn element_arithmetic() {
        let z_i = fixtures::gaussian();
        assert_eq!(z_i.mul(&el(&[1, 1]), &el(&[1, 1])).unwrap(), el(&[0, 2]));
        assert_eq!(z_i.mul(&el(&[3, -2]), &z_i.one()).unwrap(), el(&[3, -2]));
        let z5 = fixtures::sqrt_minus5();
        assert_eq!(z5.mul(&el(&[0, 1]), &el(&[0, 1])).unwrap(), el(&[-5, 0]));
        assert!(z_i.mul(&el(&[1]), &el(&[1, 1])).is_err());
    }

    #[test]
    fn regular_representation_and_norms() {
        let z_i = fixtures::gaussian();
        let a = z_i.regular_representation(&el(&[1, 1])).unwrap();
        assert_eq!(a.to_rows(), vec![vec![1.into(), 1.into()], vec![BigInt::from(-1), 1.into()]]);
        assert_eq!(z_i.regular_representation(&z_i.one()).unwrap(), IntMatrix::identity(2));
        assert_eq!(z_i.element_norm(&el(&[1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(z_i.element_norm(&el(&[5, 0])).unwrap(), BigInt::from(25));
        let z5 = fixtures::sqrt_minus5();
        assert_eq!(z5.element_norm(&el(&[1, 1])).unwrap(), BigInt::from(6));
    }

    #[test]
    fn norm_multiples() {
        let z_i = fixtures::gaussian();
        assert_eq!(norm_multiple(&z_i, &ideal(&[1, 1], &[2, 0])).unwrap(), BigInt::from(8));
        assert_eq!(norm_multiple(&z_i, &ideal(&[1, 0], &[1, 0])).unwrap(), BigInt::from(1));
        let z5 = fixtures::sqrt_minus5();
        assert_eq!(norm_multiple(&z5, &ideal(&[2, 0], &[1, 1])).unwrap(), BigInt::from(24));
        assert_eq!(norm_multiple(&z_i, &ideal(&[3, 0], &[0, 0])).unwrap(), BigInt::from(9));
        assert_eq!(TwoGenIdeal::new(el(&[0, 0]), el(&[0, 0])), Err(Error::ZeroIdeal));
        // Z[x]/(x²) has zero divisors
        let dual = fixtures::power_basis(&[0, 0]);
        assert!(matches!(norm_multiple(&dual, &ideal(&[0, 1], &[1, 0])), Err(Error::NotADomain(_))));
        assert!(check_norm_multiple(&z_i, &ideal(&[1, 1], &[2, 0]), &BigInt::from(6)).is_err());
        assert!(check_norm_multiple(&z_i, &ideal(&[1, 1], &[2, 0]), &BigInt::from(4)).is_ok());
    }

    #[test]
    fn ideal_bases() {
        let z_i = fixtures::gaussian();
        let b = ideal_hnf_basis(&z_i, &ideal(&[1, 1], &[2, 0]), &BigInt::from(8)).unwrap();
        assert_eq!(b.hnf.to_rows(), vec![vec![2.into(), 1.into()], vec![0.into(), 1.into()]]);
        assert_eq!(b.norm, BigInt::from(2));
        let unit = ideal_hnf_basis(&z_i, &ideal(&[1, 0], &[7, 3]), &BigInt::from(58)).unwrap();
        assert_eq!(unit.norm, BigInt::one());
        let z5 = fixtures::sqrt_minus5();
        let p2 = ideal_hnf_basis(&z5, &ideal(&[2, 0], &[1, 1]), &BigInt::from(24)).unwrap();
        assert_eq!(p2.norm, BigInt::from(2));
    }

    #[test]
    fn products() {
        let z_i = fixtures::gaussian();
        let p = ideal(&[1, 1], &[2, 0]);
        assert_eq!(ideal_product(&z_i, &p, &p).unwrap().norm, BigInt::from(4));
        let unit = ideal(&[1, 0], &[1, 0]);
        let alone = ideal_hnf_basis(&z_i, &p, &BigInt::from(8)).unwrap();
        assert_eq!(ideal_product(&z_i, &p, &unit).unwrap(), alone);

        let z5 = fixtures::sqrt_minus5();
        let prod = ideal_product(&z5, &ideal(&[2, 0], &[1, 1]), &ideal(&[3, 0], &[1, 1])).unwrap();
        assert_eq!(prod.norm, BigInt::from(6));
        let plus = ideal_hnf_basis(&z5, &TwoGenIdeal::principal(el(&[1, 1])).unwrap(), &BigInt::from(6)).unwrap();
        let minus = ideal_hnf_basis(&z5, &TwoGenIdeal::principal(el(&[1, -1])).unwrap(), &BigInt::from(6)).unwrap();
        assert_eq!(prod, plus);
        assert_ne!(prod, minus);
    }

    #[test]
    fn bound_holds_for_small_inputs() {
        let z_i = fixtures::gaussian();
        let i = ideal(&[3, 4], &[7, -2]);
        let h = norm_multiple(&z_i, &i).unwrap();
        assert!(within_norm_bound(&z_i, &i, &h));
    }
}
