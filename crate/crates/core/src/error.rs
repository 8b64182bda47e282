use thiserror::Error;

/// Errors raised by every analysis in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("coordinate out of range on axis {axis}: {value} not in 1..={max}")]
    CoordinateOutOfRange { axis: usize, value: usize, max: usize },

    #[error("flat index {index} not in 1..={total}")]
    IndexOutOfRange { index: usize, total: usize },

    #[error("invalid split point s={s} for M={m} factors (need 1 <= s < M)")]
    InvalidSplit { s: usize, m: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),

    #[error("conditioning event has zero probability")]
    ConditioningOnNull,

    #[error("invalid Tsallis parameter q={0} (need q > 0, q != 1)")]
    InvalidTsallis(f64),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("NotHermitian: max |rho - rho^dagger| = {deviation:e} exceeds {tolerance:e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("TraceNotOne: trace = {trace}, |trace - 1| exceeds {tolerance:e}")]
    TraceNotOne { trace: f64, tolerance: f64 },

    #[error("NotPSD: min eigenvalue {min_eigenvalue:e} below -{tolerance:e}")]
    NotPsd { min_eigenvalue: f64, tolerance: f64 },

    #[error("NotPSD: Bloch radius {radius} exceeds 1")]
    OutsideBlochBall { radius: f64 },

    #[error("{0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
