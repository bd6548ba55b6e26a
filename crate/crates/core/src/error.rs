//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid set-valued tableau: {0}")]
    InvalidSetValued(String),
    #[error("invalid reverse plane partition: {0}")]
    InvalidPlanePartition(String),
    #[error("invalid elegant filling: {0}")]
    InvalidFilling(String),
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("word content is not a partition: {0}")]
    ContentNotPartition(String),
    #[error("cell ({0}, {1}) is not a removable corner")]
    NotRemovableCorner(usize, usize),
    #[error("cell ({0}, {1}) is not an addable corner")]
    NotAddableCorner(usize, usize),
    #[error("stop row {stop_row} is not below row {row}")]
    BadStopRow { stop_row: usize, row: usize },
    #[error("no multicell to dilate")]
    NoMulticell,
    #[error("no repeated column entry to contract")]
    NoRepeatedEntry,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cutoff {cutoff} too small: {reason}")]
    CutoffTooSmall { cutoff: usize, reason: String },
    #[error("incompatible truncations: {0}")]
    IncompatibleTruncation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("model schema violation: {0}")]
    ModelSchema(String),
    #[error("unresolvable pairing configuration: {0}")]
    UnresolvablePairing(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
