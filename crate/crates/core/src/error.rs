use thiserror::Error;

use crate::element::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: must satisfy {1}")]
    InvalidRank(usize, &'static str),
    #[error("vertex label {label} out of range 1..={max}")]
    LabelOutOfRange { label: usize, max: usize },
    #[error("degenerate edge ({0},{0})")]
    LoopEdge(usize),
    #[error("handful is not NBC: {0}")]
    NotNbc(String),
    #[error("index {index} out of range for {count} NBC monomials")]
    IndexOutOfRange { index: u64, count: u64 },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("operation is only defined on {0}")]
    WrongRing(Ring),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
