use thiserror::Error;

/// Errors raised by the toolkit. Outcomes that are part of normal operation
/// (a polynomial that does not divide another, an inequality that does not
/// hold) are reported through return values, never through this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field degree {n} outside supported range 1..={max}")]
    FieldDegree { n: u32, max: u32 },

    #[error("operands live in different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("element 0x{bits:x} does not fit in GF(2^{n})")]
    ElementRange { bits: u64, n: u32 },

    #[error("invalid root-of-unity order {0}: must be odd and at least 3")]
    InvalidEll(u64),

    #[error("invalid exponent t={t}: {reason}")]
    InvalidExponent { t: u64, reason: &'static str },

    #[error("t={0} is a Gold exponent (odd cofactor 1); no singularity profile exists")]
    GoldExponent(u64),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial degree {degree} exceeds ceiling {max}")]
    DegreeCeiling { degree: u32, max: u32 },

    #[error("{what}: value {value} exceeds ceiling {max}")]
    Ceiling {
        what: &'static str,
        value: u64,
        max: u64,
    },

    #[error("field GF(2^{small}) is not a subfield of GF(2^{big})")]
    NotSubfield { small: u32, big: u32 },

    #[error("expected a nonzero polynomial")]
    ZeroPolynomial,

    #[error("expected a homogeneous polynomial")]
    NotHomogeneous,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
