//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violated a domain precondition (`k ≤ 0`, `T ≤ 0`, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature exhausted its subdivision budget. The best
    /// estimate and its error bound are carried along for diagnostics.
    #[error("quadrature did not converge after {subdivisions} subdivisions \
             (best estimate {value:.6e}, error estimate {error_estimate:.3e})")]
    QuadratureNonConvergence {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },

    /// The nonnegative least-squares solver stopped before reaching its
    /// optimality conditions.
    #[error("solver failed: {0}")]
    Solver(String),

    /// A field evaluation was requested outside the supported radius.
    #[error("field point out of range: k_T*R = {kt_r:.3} exceeds the cap {max:.1}")]
    FieldOutOfRange { kt_r: f64, max: f64 },

    /// An internal cross-check between two independent computation routes
    /// disagreed beyond its tolerance.
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
