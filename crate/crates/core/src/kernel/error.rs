//! Error vocabulary for the exact-arithmetic kernel.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    /// Arithmetic between values whose variable contexts differ.
    #[error("mismatched variable contexts: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    /// A denominator factor that cannot be expanded geometrically
    /// (constant term is not +1, or a term has no series-variable degree).
    #[error("denominator factor not normalized: {0}")]
    Normalization(String),

    /// A coefficient was requested outside the truncation box.
    /// Out-of-box coefficients are undefined, not zero.
    #[error("exponent {0:?} lies outside the series truncation box")]
    OutOfBox(Vec<i32>),

    /// Invalid numeric input (negative order, zero modulus, ...).
    #[error("domain error: {0}")]
    Domain(String),
}
