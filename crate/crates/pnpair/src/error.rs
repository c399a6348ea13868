//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus of degree {degree} is not irreducible over F_2")]
    NonIrreducibleModulus { degree: u32 },

    #[error("field with 2^{n} elements exceeds the configured cap for this operation")]
    FieldTooLarge { n: u64 },

    #[error("0^0 is undefined")]
    ZeroToZero,

    #[error("the zero element has no multiplicative order")]
    ZeroElement,

    #[error("factorization of {value} exceeded the effort budget (stuck cofactor {cofactor})")]
    FactorizationFailure { value: String, cofactor: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
