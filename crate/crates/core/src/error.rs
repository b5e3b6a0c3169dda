//! Error type shared by every module of the crate.

use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building graphs, checking
/// labelings, or reading the on-disk formats.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A constructor was called with parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An edge list does not describe a tree; the message names the failure.
    #[error("invalid tree: {0}")]
    InvalidTree(String),

    /// BFS could not reach every vertex.
    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    /// A labeling contained a negative label.
    #[error("invalid labeling input: vertex {vertex} has negative label {label}")]
    NegativeLabel { vertex: usize, label: i64 },

    /// A vertex sequence did not cover every vertex exactly once.
    #[error("not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    /// The canonical labeling recurrence produced a negative step.
    #[error(
        "canonical labeling infeasible at step {position}: gap {step} < 0 \
         (consecutive level sum exceeds tree diameter + epsilon)"
    )]
    InfeasibleStep { position: usize, step: i64 },

    /// An ordering index pair was outside `0 <= a < b <= N-1`.
    #[error("ordering index out of range: a={a}, b={b}, len={len}")]
    IndexOutOfRange { a: usize, b: usize, len: usize },

    /// Neither the general scheme nor the search fallback reached the target span.
    #[error(
        "construction incomplete for n={n}: target span {target}, best span found {best_span}"
    )]
    ConstructionIncomplete {
        n: usize,
        target: i64,
        best_span: i64,
    },

    /// A text input (edge list or document) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure, with the path that caused it.
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// JSON (de)serialization failure.
    #[error("document error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wrap an I/O failure with the path that caused it.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
