//! Prime and prime-power tests for ideals: build `O/I`, then ask whether it
//! is a field or a local ring.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::order::{check_norm_multiple, norm_multiple, OrderPresentation, TwoGenIdeal};
use crate::quotient::{output_basis, QuotientBasis, QuotientCertificate};
use crate::ring::{field_test, is_local, FiniteRingPresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    UnitIdeal,
    Prime,
    PrimePowerNotPrime,
    Composite,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::UnitIdeal => "unit-ideal",
            VerdictKind::Prime => "prime",
            VerdictKind::PrimePowerNotPrime => "prime-power-not-prime",
            VerdictKind::Composite => "composite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Question {
    /// Is `I` a prime ideal?
    Prime,
    /// Is `I` a power of a prime ideal?
    PrimePower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateSummary {
    /// Additive invariants `d_1, …, d_m` of `O/I`.
    pub divisors: Vec<BigInt>,
    /// Degrees of the minimal polynomials found by the field test.
    pub tower_degrees: Vec<usize>,
    /// Characteristic of `O/I` when the moduli are one prime.
    pub characteristic: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub question: Question,
    pub kind: VerdictKind,
    pub norm: BigInt,
    pub h: BigInt,
    pub quotient: Option<FiniteRingPresentation>,
    pub certificate: Option<CertificateSummary>,
    pub transforms: Option<QuotientCertificate>,
}

impl Verdict {
    /// The Boolean answer to the question asked. The unit ideal is neither
    /// prime nor a prime power.
    pub fn answer(&self) -> bool {
        match self.question {
            Question::Prime => self.kind == VerdictKind::Prime,
            Question::PrimePower => {
                matches!(self.kind, VerdictKind::Prime | VerdictKind::PrimePowerNotPrime)
            }
        }
    }
}

/// Uses the supplied `h` after checking it, or `N(α)·N(β)`.
pub fn resolve_h(order: &OrderPresentation, ideal: &TwoGenIdeal, h: Option<&BigInt>) -> Result<BigInt> {
    match h {
        Some(h) => {
            check_norm_multiple(order, ideal, h)?;
            Ok(h.clone())
        }
        None => norm_multiple(order, ideal),
    }
}

fn check_order(order: &OrderPresentation) -> Result<()> {
    let report = order.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidPresentation(format!(
            "multiplication table is not a commutative ring with identity: {v} ({} violation(s))",
            report.violations.len()
        )));
    }
    Ok(())
}

/// Answers `question` for `I`: `N(I) = 1` gives the unit ideal, otherwise
/// the quotient presentation decides. The kind also records the answer to
/// the other question.
pub fn decide(
    order: &OrderPresentation,
    ideal: &TwoGenIdeal,
    h: Option<&BigInt>,
    question: Question,
) -> Result<Verdict> {
    check_order(order)?;
    let h = resolve_h(order, ideal, h)?;
    let (ring, certificate) = match output_basis(order, ideal, &h)? {
        QuotientBasis::UnitIdeal => {
            return Ok(Verdict {
                question,
                kind: VerdictKind::UnitIdeal,
                norm: BigInt::one(),
                h,
                quotient: None,
                certificate: None,
                transforms: None,
            })
        }
        QuotientBasis::Quotient { ring, certificate } => (ring, certificate),
    };
    let report = field_test(&ring);
    let kind = match question {
        Question::Prime if report.is_field() => VerdictKind::Prime,
        Question::Prime if is_local(&ring) => VerdictKind::PrimePowerNotPrime,
        Question::Prime => VerdictKind::Composite,
        Question::PrimePower if !is_local(&ring) => VerdictKind::Composite,
        Question::PrimePower if report.is_field() => VerdictKind::Prime,
        Question::PrimePower => VerdictKind::PrimePowerNotPrime,
    };
    Ok(Verdict {
        question,
        kind,
        norm: certificate.norm.clone(),
        h,
        certificate: Some(CertificateSummary {
            divisors: ring.moduli().to_vec(),
            tower_degrees: report.degrees,
            characteristic: report.characteristic,
        }),
        quotient: Some(ring),
        transforms: Some(certificate),
    })
}

/// Whether `I` is a prime ideal.
pub fn is_prime_ideal(order: &OrderPresentation, ideal: &TwoGenIdeal, h: Option<&BigInt>) -> Result<Verdict> {
    decide(order, ideal, h, Question::Prime)
}

/// Whether `I` is a power of a prime ideal.
pub fn is_prime_ideal_power(order: &OrderPresentation, ideal: &TwoGenIdeal, h: Option<&BigInt>) -> Result<Verdict> {
    decide(order, ideal, h, Question::PrimePower)
}
