//! Deciding whether an ideal of an order of finite rank is prime or a
//! power of a prime, from a multiplication table and two generators.
//!
//! The quotient `O/I` is computed as a basis representation (additive
//! invariants `d_i` and structure constants) through Hermite and Smith
//! normal forms taken modulo a multiple `h` of the ideal norm. Primality
//! of `I` is then the question whether that finite ring is a field, and
//! being a prime power whether it is local.

#![allow(clippy::needless_range_loop)]

pub mod decide;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod linalg;
pub mod oracle;
pub mod order;
pub mod primality;
pub mod quotient;
pub mod ring;

pub use decide::{decide, is_prime_ideal, is_prime_ideal_power, CertificateSummary, Question, Verdict, VerdictKind};
pub use error::{Error, Result};
pub use linalg::{
    det_modular, elementary_divisors_modular, hadamard_bound, hnf_modular, hnf_with_transform, inverse_mod,
    snf_with_transforms, HnfResult, IntMatrix, SnfResult,
};
pub use order::{
    ideal_hnf_basis, ideal_product, norm_multiple, IdealBasis, OrderElement, OrderPresentation, TwoGenIdeal,
    ValidationReport,
};
pub use primality::{is_prime_integer, PrimalityBackend};
pub use quotient::{output_basis, QuotientBasis, QuotientCertificate};
pub use ring::{is_field, is_local, FiniteRingPresentation, RingElement};

pub use num_bigint::BigInt;
