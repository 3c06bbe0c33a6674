//! Crate-wide error type.
//!
//! The variants mirror the failure classes of the engine: domain and
//! coverage violations on operation inputs, representation limits of the
//! log-domain kernel, data-file problems, and certification failures (a
//! computed bound that violates a published target).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("coverage error: {msg} (requires coverage up to {required})")]
    Coverage { msg: String, required: f64 },

    #[error("range error: log magnitude {0:e} exceeds 1e300")]
    LogRange(f64),

    #[error("loss of precision: cancellation left {remaining:e} of terms totalling {total:e}")]
    PrecisionLoss { remaining: f64, total: f64 },

    #[error(
        "value with log magnitude {0} is not representable as a plain real; keep it in log space"
    )]
    Unrepresentable(f64),

    #[error("unsupported sigma {0}: the zero-density constants are per-sigma and may not be interpolated")]
    UnsupportedSigma(f64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("data error in {path}:{line}: {msg}")]
    Data {
        path: String,
        line: usize,
        msg: String,
    },

    #[error(
        "quadrature did not reach tolerance: achieved width {achieved:e} > requested {requested:e}"
    )]
    QuadTolerance { achieved: f64, requested: f64 },

    #[error("certification failure: {0}")]
    Certification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
