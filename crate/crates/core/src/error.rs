use thiserror::Error;

/// Errors produced by geometry, kernel, measure and scenario operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point lies outside the open unit ball (|z| = {norm})")]
    OutsideOpenBall { norm: f64 },

    #[error("point lies outside the closed unit ball (|z| = {norm})")]
    OutsideClosedBall { norm: f64 },

    #[error("point is not on the unit sphere (|z| = {norm})")]
    NotOnSphere { norm: f64 },

    #[error("evaluation at the kernel pole: {context}")]
    Pole { context: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("p = {p} outside the admissible range (1, {limit}) for n = {n}; set the override flag to force it")]
    POutOfRange { p: f64, limit: f64, n: usize },

    #[error("nonpositive value at index {index}: {value}")]
    NonPositiveValue { index: usize, value: f64 },

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
