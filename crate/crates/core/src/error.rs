use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not invertible modulo {0}")]
    NotUnimodular(BigInt),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    /// A nonzero element has a singular regular representation, so the
    /// multiplication table cannot describe an integral domain.
    #[error("nonzero element {0} has norm zero; the ring is not a domain")]
    NotADomain(String),

    #[error("the zero ideal is not supported")]
    ZeroIdeal,

    #[error("invalid ring presentation: {0}")]
    InvalidPresentation(String),

    #[error("enumeration cap exceeded: ring has {size} elements, cap is {cap}")]
    CapExceeded { size: BigInt, cap: usize },

    #[error("format error: {0}")]
    Format(String),
}
