//! Error and validation-violation types shared by the whole crate.

use std::fmt;

use thiserror::Error;

/// A single structural defect found while validating a datum.
///
/// `path` is a JSON-pointer-style location into the datum file
/// (e.g. `/colors/2/moved_by`), so loader errors can be traced back
/// to the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: String,
    pub message: String,
}

impl Violation {
    pub fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Violation {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: char, rank: usize },

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("expected {expected} coefficients, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("simple root {root} is itself a spherical root; type (a) colors are unsupported")]
    TypeAColorUnsupported { root: usize },

    #[error("rho values of the two moving roots disagree ({first} vs {second})")]
    RhoInconsistent { first: String, second: String },

    #[error("classes live on different data")]
    DatumMismatch,

    #[error("curve class is not movable (or is zero)")]
    NotMovable,

    #[error("curve class is not effective and nonzero: {0}")]
    NotEffective(String),

    #[error("operation requires a group-compactification datum chain")]
    NotGroupKind,

    #[error("simple root {root} moves no color")]
    RootMovesNoColor { root: usize },

    #[error("anticanonical color coefficient {value} at position {index} is negative")]
    NegativeAnticanonicalCoeff { index: usize, value: i64 },

    #[error("internal consistency check failed: {0}")]
    ConsistencyFailure(String),

    #[error("fixture file not found or unreadable: {path}")]
    FixtureMissing { path: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("datum validation failed with {} violation(s)", .0.len())]
    Validation(Vec<Violation>),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Validation violations, when this error carries them.
    pub fn violations(&self) -> &[Violation] {
        match self {
            Error::Validation(v) => v,
            _ => &[],
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
