//! Error type shared across the crate.
//!
//! Row and column numbers in messages are 1-based, matching how users count
//! lines and fields in a CSV file.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse cell at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },

    #[error("ragged csv: row {row} has {got} fields, expected {expected}")]
    RaggedRow {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("column {col} is degenerate: {msg}")]
    DegenerateColumn { col: usize, msg: String },

    #[error("row {row} has no observed entries")]
    AllMissingRow { row: usize },

    #[error("column {col} has no observed entries")]
    AllMissingColumn { col: usize },

    /// A symmetric block failed the invertibility gate.
    #[error("ill-conditioned block ({context}): reciprocal condition number {rcond:.3e} <= {threshold:.1e}")]
    IllConditioned {
        rcond: f64,
        threshold: f64,
        context: String,
    },

    #[error("matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("metric undefined: {0}")]
    MetricUndefined(String),

    #[error("invalid simulation spec: {0}")]
    InvalidSimSpec(String),

    #[error("invalid options: {0}")]
    InvalidOptions(String),

    #[error("mcar deletion infeasible after {retries} attempts: {msg}")]
    DeletionInfeasible { retries: usize, msg: String },

    #[error("benchmark failed: {0}")]
    Benchmark(String),

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Wraps the error with a location note, e.g. the cycle and pattern an
    /// iterative run was in when the failure happened.
    pub fn with_context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    /// Innermost error, looking through `Context` wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
