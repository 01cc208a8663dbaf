use crate::ordinal::{Ordinal, ParseError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid ordinal literal: {0}")]
    Parse(#[from] ParseError),
    #[error("the ladder C_0 is undefined")]
    ZeroLadder,
    #[error("ladder of successor {alpha} has only index 0, asked for {index}")]
    LadderIndex { alpha: Ordinal, index: usize },
    #[error("ladder of limit {alpha} meets {bound} in an infinite set")]
    UnboundedIntersection { alpha: Ordinal, bound: Ordinal },
    #[error("ladder scan of {alpha} exceeded {limit} entries")]
    ScanLimit { alpha: Ordinal, limit: usize },
    #[error("expected {lower} <= {upper}")]
    Order { lower: Ordinal, upper: Ordinal },
    #[error("expected {lower} < {upper}")]
    StrictOrder { lower: Ordinal, upper: Ordinal },
    #[error("{0} is not a limit ordinal")]
    NotLimit(Ordinal),
    #[error("{0} is not a successor ordinal")]
    NotSuccessor(Ordinal),
    #[error("invalid ladder override for {alpha}: {reason}")]
    InvalidOverride { alpha: Ordinal, reason: String },
    #[error("segment is not a contiguous part of the lower trace")]
    NotContiguous,
    #[error("tree nodes were evaluated on different samples")]
    SampleMismatch,
    #[error("no successor found in ladder intervals of {alpha} within {bound} steps")]
    SearchBound { alpha: Ordinal, bound: usize },
    #[error("invalid sample spec at byte {position}: {reason}")]
    SampleSpec { position: usize, reason: String },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
