use thiserror::Error;

/// Errors raised by the partition, character and coefficient routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KronError {
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("size mismatch: {0:?}")]
    SizeMismatch(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },

    #[error("partition {partition} does not fit the rectangle {width}x{height}: {reason}")]
    Rectangle {
        partition: String,
        width: u32,
        height: usize,
        reason: String,
    },

    #[error("invalid frame p={p}, q={q}, r={r}, t={t}: {reason}")]
    Frame {
        p: usize,
        q: usize,
        r: usize,
        t: u32,
        reason: String,
    },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("method not applicable: {0}")]
    NotApplicable(String),

    #[error("part overflow")]
    Overflow,

    #[error("inexact division in inner product (degree {0})")]
    Inexact(usize),

    #[error("negative multiplicity {0}")]
    Negative(String),
}

pub type Result<T> = std::result::Result<T, KronError>;
