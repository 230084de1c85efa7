use thiserror::Error;

/// Everything that can go wrong in the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("exponent {0} exceeds the per-variable limit {limit}", limit = crate::monomial::MAX_EXPONENT)]
    ExponentOverflow(u64),

    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("free module mismatch: {0}")]
    ModuleMismatch(String),

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("colon by the zero ideal")]
    ZeroColon,

    #[error("S-pair budget of {0} exceeded")]
    BudgetExceeded(u64),

    #[error("image is not contained in the kernel (differentials do not compose to zero)")]
    ContainmentViolation,

    #[error("ring is not F-pure; the degree-zero double Ext is not a Lyubeznik number here")]
    NotFPure,

    #[error("ideal {0} is not contained in ideal {1}")]
    NotContained(String, String),

    #[error("the unit ideal has no quotient ring to study")]
    UnitIdeal,

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
