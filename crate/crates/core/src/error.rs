use thiserror::Error;

/// Failure modes shared by every evaluator and checker in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HgError {
    #[error("domain error: {0}")]
    Domain(String),

    /// Iteration budget exhausted. `value` and `err` carry the best estimate
    /// reached so callers can still report it.
    #[error("{what} did not converge (value {value:e}, error estimate {err:e})")]
    NonConvergence {
        what: &'static str,
        value: f64,
        err: f64,
    },

    #[error("{checker}: hypothesis violated: {condition}")]
    Hypothesis {
        checker: &'static str,
        condition: String,
    },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("golden file: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, HgError>;

pub(crate) fn domain(msg: impl Into<String>) -> HgError {
    HgError::Domain(msg.into())
}

/// Rejects NaN and infinities with a message naming the argument.
pub(crate) fn require_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("{name} must be finite, got {v}")))
    }
}
