use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the x² coefficient must be nonzero")]
    DegenerateAlpha,

    #[error("the y² coefficient must be nonzero")]
    DegenerateGamma,

    #[error("discriminant {discriminant} is not a positive perfect square")]
    NotFactorable { discriminant: BigInt },

    #[error("|I| = {value} exceeds the divisor enumeration cap {cap}")]
    DivisorLimitExceeded { value: BigUint, cap: BigUint },

    #[error("{0} must be positive")]
    NonPositive(&'static str),

    #[error("linear equation has both coefficients zero")]
    ZeroLinearForm,

    #[error("invariant I is zero; the conic is a pair of lines")]
    DegenerateConic,

    #[error("invariant I is nonzero; the conic has finitely many integral points")]
    NonDegenerateConic,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateAlpha => "DegenerateAlpha",
            Error::DegenerateGamma => "DegenerateGamma",
            Error::NotFactorable { .. } => "NotFactorable",
            Error::DivisorLimitExceeded { .. } => "DivisorLimitExceeded",
            Error::NonPositive(_) => "NonPositive",
            Error::ZeroLinearForm => "ZeroLinearForm",
            Error::DegenerateConic => "DegenerateConic",
            Error::NonDegenerateConic => "NonDegenerateConic",
            Error::Precondition(_) => "Precondition",
        }
    }
}
