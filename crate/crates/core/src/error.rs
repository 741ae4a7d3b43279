use thiserror::Error;

/// Errors surfaced by the symbolic and numeric layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation degrees differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("exponential needs a series with zero constant term")]
    NonNilpotentExp,

    #[error("index {name} = {value} out of range ({expected})")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        expected: String,
    },

    #[error("composition parts must all be >= 1 and at least one part is required")]
    InvalidComposition,

    #[error("factor cap must be >= 1")]
    InvalidFactorCap,

    #[error("expansion side mismatch: expected {expected}")]
    SideMismatch { expected: &'static str },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid degree list: {0}")]
    InvalidDegrees(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
