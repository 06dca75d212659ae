//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, Error)]
pub enum LamewError {
    /// An input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A non-terminating series was requested at an argument where it diverges.
    #[error("divergence error: {0}")]
    Divergence(String),

    /// Evaluation at (or too close to) a pole of the function.
    #[error("pole error: {0}")]
    Pole(String),

    /// A real principal branch is undefined (negative base, non-integer power).
    #[error("branch error: {0}")]
    Branch(String),

    /// A polynomial-family evaluation needs an integer termination limit that
    /// does not exist at the given level.
    #[error("quantization error at level {level}: {message}")]
    Quantization { level: usize, message: String },

    /// An integration node hit a vanishing denominator of the w-chain.
    #[error("singular configuration: {0}")]
    Singular(String),

    /// Quadrature self-checks failed (e.g. residual imaginary part too large).
    #[error("quadrature failure: {0}")]
    Quadrature(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, LamewError>;
