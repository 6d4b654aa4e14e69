use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot factorize zero")]
    FactorizeZero,

    #[error("factorization incomplete: composite cofactor {0} was not split within the iteration budget")]
    FactorizationIncomplete(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("series does not terminate: {0}")]
    NonTerminating(String),

    #[error("denominator parameter {param} vanishes at step {step}, before the series terminates")]
    ZeroDenominator { param: String, step: usize },

    #[error("count for {shape} is not an integer: {value}")]
    NonIntegral { shape: String, value: String },

    #[error("shape has {size} cells, above the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("method `{method}` does not apply to {shape}")]
    Inapplicable { method: String, shape: String },
}
