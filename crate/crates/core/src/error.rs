//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Every conditioning stratum was dropped; the CI test carries no
    /// information and the caller must treat the edge as untested.
    #[error("untestable: all conditioning strata dropped")]
    Untestable,

    #[error("noise calibration failed: {0}")]
    Calibration(String),

    #[error("privacy budget exhausted")]
    BudgetExhausted,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
