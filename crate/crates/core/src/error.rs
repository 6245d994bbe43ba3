//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A system specification violates a field invariant.
    #[error("invalid system spec: {0}")]
    InvalidSpec(String),

    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix has the wrong dimension for the requested operation.
    #[error("dimension mismatch: expected {expected}x{expected}, got {got}x{got}")]
    Dimension { expected: usize, got: usize },

    /// A covariance matrix failed a physicality check beyond numerical noise.
    #[error("physicality violation: {0}")]
    Physicality(String),

    /// The integrator hit a non-finite covariance entry. `t_last` is the last
    /// time with finite entries; `partial` holds everything recorded up to it.
    #[error("integration aborted at Gamma*t = {t_last}: non-finite covariance entry")]
    IntegrationAbort {
        t_last: f64,
        partial: Box<crate::dynamics::TraceRecord>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
