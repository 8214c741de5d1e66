use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at z = {0}")]
    Pole(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("newton iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("iterate left the admissible domain")]
    GuardViolation,

    #[error("path continuation broke down after {segments} segments (reached {progress:.3} of the path)")]
    ContinuationBreakdown { segments: usize, progress: f64 },

    #[error("quadrature budget of {subdivisions} subdivisions exhausted (error estimate {error:e})")]
    QuadratureBudget { subdivisions: usize, error: f64 },

    #[error("no sign change found: {0}")]
    NoBracket(String),

    #[error("insufficient resolvable points: {0}")]
    Unresolvable(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
