use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The argument lies outside the region where the series converges.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = 1")]
    Pole,

    /// `|1 - 2^(1-s)|` is too small to divide by safely.
    #[error("near-singular eta factor: |1 - 2^(1-s)| = {factor:e} < {threshold:e}")]
    NearSingular { factor: f64, threshold: f64 },

    #[error("tolerance {tol:e} unreachable within {budget} terms (best bound {best:e})")]
    ToleranceUnreachable { tol: f64, budget: u64, best: f64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit: {what} = {requested} exceeds budget {limit}")]
    Resource {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("class index {index} out of range (table has {len} classes)")]
    Index { index: usize, len: usize },

    #[error("invalid character table: {0}")]
    InvalidTable(String),

    /// The quadrature rule does not integrate the requested polynomial degree exactly.
    #[error("quadrature rule integrates degree {available} exactly, {required} required")]
    InsufficientRule { required: usize, available: usize },

    /// Two independent evaluations of the same identity disagreed.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}
