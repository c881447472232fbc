use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is not allowed for type {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unknown Lie type family {0:?}")]
    UnknownFamily(String),

    #[error("the set T of simple roots must be nonempty")]
    EmptyT,

    #[error("simple root index {index} is out of range 1..={rank}")]
    SimpleRootOutOfRange { index: usize, rank: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("quasi-quadratic criterion disagrees with the semiradical closure for T = {t:?}")]
    CriterionMismatch { t: Vec<usize> },

    #[error("operation requires type A, got {0}")]
    WrongType(String),

    #[error("{count} subsets exceed the cap of {cap}; raise --max-subsets")]
    TooManySubsets { count: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
