use thiserror::Error;

/// Failures raised by the numerical kernels and moment routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative solver ran out of iterations.
    #[error("{what} did not converge after {iterations} iterations (last iterate {last_iterate})")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
        last_iterate: f64,
    },

    /// A computation produced a non-finite or otherwise inconsistent value.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A quadrature finished with an error estimate above the caller's tolerance.
    #[error("quadrature for {what} not converged: error estimate {estimate:e} exceeds {tolerance:e}")]
    Quadrature {
        what: &'static str,
        estimate: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
