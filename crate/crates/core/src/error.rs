//! Error type for operations whose failure indicates a formula bug rather
//! than a programmer error (those panic instead).

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A denominator factor survived a substitution or sum where the theory
    /// guarantees cancellation.
    #[error("denominator factor does not cancel: {0}")]
    NonCancellingDenominator(String),

    /// An exact scalar division that the theory guarantees failed.
    #[error("inexact division by {0}")]
    InexactDivisor(String),

    /// A substitution sent a denominator factor to zero.
    #[error("denominator factor vanishes under substitution: {0}")]
    ZeroDenominator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
