use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the region where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// Evaluation at a singular point of the function.
    #[error("singular input: {0}")]
    Singular(String),
    /// A truncated series was requested too close to its circle of convergence.
    #[error("series does not converge usefully at |z| = {0}")]
    Convergence(f64),
    /// A bracketing solver could not isolate a unique root.
    #[error("solver failure: {0}")]
    SolverFailure(String),
    /// A function value needed as a divisor vanished.
    #[error("evaluation error: {0}")]
    Evaluation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
