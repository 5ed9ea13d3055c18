use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    /// A product or Pochhammer factor vanished; `index` is the offending factor.
    #[error("vanishing factor at index {index} in {what}")]
    VanishingFactor { what: String, index: i64 },

    #[error("matrix is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("matrix is singular: {0}")]
    Singular(String),

    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    #[error("sampler exhausted after {attempts} attempts; last violation: {last}")]
    SamplerExhausted { attempts: usize, last: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("operator is not block-preserving: {0}")]
    NotBlockPreserving(String),

    #[error("exactness window too small: {0}")]
    WindowTooSmall(String),

    #[error("unknown name: {0}")]
    Unknown(String),

    #[error("missing parameter: {0}")]
    MissingParam(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("solution space has dimension {dim}, expected {expected}: {what}")]
    SolutionDimension { what: String, dim: usize, expected: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
