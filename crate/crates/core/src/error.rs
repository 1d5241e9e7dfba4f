use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree {value} at position {position}")]
    InvalidDegree { position: usize, value: i64 },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("operation requires a nonempty sequence")]
    EmptySequence,

    #[error("sequence {0} is not graphical")]
    NotGraphical(String),

    #[error("degree {degree} exceeds n − 1 = {max} for a sequence of length {len}", max = .len.saturating_sub(1))]
    DegreeTooLarge { degree: u32, len: usize },

    #[error("last principal difference {0} is odd")]
    OddLastDifference(i64),

    #[error("Δ_{k} = {value}, but a split-off needs Δ_k = 0")]
    NonzeroDifference { k: usize, value: i64 },

    #[error("partition does not match the sequence: {0}")]
    InconsistentPartition(String),

    #[error("sequences have different sums ({left} vs {right})")]
    UnequalSums { left: i64, right: i64 },

    #[error("({r}, {t}) is not a unit transformation of the sequence")]
    InvalidTransformation { r: usize, t: usize },

    #[error("Δ_{k} of the transformed sequence is not covered by the update rule")]
    UpdateOutOfRange { k: usize },

    #[error("sequences are not comparable in the dominance order")]
    NotComparable,

    #[error("size {size} exceeds the limit of {limit}")]
    LimitExceeded { size: usize, limit: usize },

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("graph error: {0}")]
    InvalidGraph(String),
}
