//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("matrix index {0} out of range, expected 0..=5")]
    InvalidAlphaIndex(usize),

    #[error("grid needs at least {min} points, got {got}")]
    GridTooSmall { got: usize, min: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grids are incompatible: {0}")]
    GridMismatch(String),

    #[error("degenerate wave specification: {0}")]
    DegenerateSpec(String),

    #[error("stability violated: c*dt/dy = {cfl} exceeds 1")]
    StabilityViolation { cfl: f64 },

    #[error("wavenumber {k} is not commensurate with grid length {length}")]
    NonCommensurate { k: f64, length: f64 },

    #[error("outside function domain: {0}")]
    DomainError(String),

    #[error("no bracket for the self-consistency root in [0, {upper}]")]
    NoBracket { upper: f64 },

    #[error("zero field is degenerate here")]
    ZeroField,

    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}
