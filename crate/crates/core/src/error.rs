use thiserror::Error;

use crate::colouring::Colour;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("subset has {found} elements, expected {expected}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("subset {0:?} is not strictly increasing")]
    UnsortedSubset(Vec<usize>),
    #[error("rank {rank} out of range (only {total} subsets)")]
    RankOutOfRange { rank: u64, total: u64 },
    #[error("uniformity r={r} requires n >= r and r >= 1 (n={n})")]
    BadUniformity { n: usize, r: usize },
    #[error("palette size k={0} unsupported (1..=64)")]
    BadPalette(usize),
    #[error("colour {colour} outside palette 1..={k}")]
    ColourOutOfPalette { colour: Colour, k: usize },
    #[error("colour {0} is never used (palette not tight)")]
    UnusedColour(Colour),
    #[error("colour table has {found} entries, expected C(n,r)={expected}")]
    WrongLength { expected: u64, found: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("construction failed after {attempts} attempts: {reason}")]
    ConstructionFailed { attempts: usize, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
