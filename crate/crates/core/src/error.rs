use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series constant term must be 1")]
    NotUnit,

    #[error("substituted series must have zero constant term")]
    NonZeroConstant,

    #[error("series must have the form x + O(x^2) to be inverted under composition")]
    NotNormalized,

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("non-integral coefficient {0}")]
    NonIntegral(String),

    #[error("exact division by {divisor} left a remainder")]
    InexactDivision { divisor: String },

    #[error("need at least {needed} variables, got {given}")]
    TooFewVariables { needed: usize, given: usize },

    #[error("expected homogeneous weight {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("record {0:?} is incomplete")]
    Incomplete(String),

    #[error("chern numbers must share one convention (got {0})")]
    ConventionMismatch(String),

    #[error("Euler characteristic is zero")]
    ZeroEuler,

    #[error("independent computations disagree: {0}")]
    RoutesDisagree(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
