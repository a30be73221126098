use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty time set: {0}")]
    EmptyTimeSet(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("measure has zero mass")]
    EmptyMeasure,

    #[error("unknown system `{0}`")]
    UnknownSystem(String),

    #[error("unsupported system: {0}")]
    UnsupportedSystem(String),

    #[error("no hyperbolic time at or below horizon {0}")]
    NoHyperbolicTime(usize),

    #[error("observable index {index} out of range (last index is {max})")]
    ObservableIndex { index: usize, max: usize },

    #[error("incomplete input: {0}")]
    IncompleteInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown property suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
