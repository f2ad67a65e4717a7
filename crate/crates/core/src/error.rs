use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter is outside the range accepted by every evaluator.
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The requested point lies outside the domain where the quantity is defined
    /// or where the chosen representation converges.
    #[error("domain error: {0}")]
    Domain(String),

    /// Reaching the tolerance would need more terms than the configured cap.
    #[error("tolerance {tol:e} unreachable: needs more than {cap} terms")]
    ToleranceUnreachable { tol: f64, cap: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Successive quadrature refinements disagree by far more than the tolerance.
    #[error("quadrature did not converge: refinement disagreement {disagreement:e} for tol {tol:e}")]
    NonConvergence { disagreement: f64, tol: f64 },
}

impl Error {
    /// `true` for errors caused by the caller asking for a point outside the
    /// mathematical domain (as opposed to a numerical failure).
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::InvalidParameter { .. } | Error::Precondition(_)
        )
    }
}
