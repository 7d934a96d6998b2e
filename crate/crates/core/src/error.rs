use thiserror::Error;

use crate::socle::AlgebraKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{text}`: {reason}")]
    ParsePartition { text: String, reason: String },

    #[error("unknown algebra `{0}` (expected gl, sl, sp or so)")]
    ParseAlgebra(String),

    #[error("{algebra} only acts on pure tensors V^d; got mixed shape ({p},{q})")]
    MixedShape { algebra: AlgebraKind, p: usize, q: usize },

    #[error("{0}")]
    InvalidShape(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("highest weight of {label} does not fit in rank {rank}")]
    RankTooSmall { label: String, rank: usize },

    #[error("invalid slot pair {pair:?}: {reason}")]
    InvalidSlots { pair: (usize, usize), reason: String },

    #[error("index pairs {0:?} and {1:?} overlap")]
    OverlappingPairs((usize, usize), (usize, usize)),

    #[error("dimension mismatch: {0}")]
    SizeMismatch(String),

    #[error("subspace is not invariant under the raising operator {0}")]
    NonInvariant(String),

    #[error("{0} is only defined for gl/sl models")]
    Unsupported(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
