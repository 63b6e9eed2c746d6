use thiserror::Error;

/// Errors raised when an input violates the contract of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter s_{letter} is out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={degree}: {images:?}")]
    NotAPermutation { images: Vec<usize>, degree: usize },

    #[error("index {index} is outside 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },

    #[error("blocks overlap at {0}")]
    OverlappingBlocks(usize),

    #[error("blocks {0:?} are not noncrossing")]
    Crossing(Vec<Vec<usize>>),

    #[error("syllable needs j < k, got ({j}, {k})")]
    InvalidSyllable { j: usize, k: usize },

    #[error("invalid (D, U) pair: {0}")]
    InvalidDuPair(String),

    #[error("roots {0:?} do not form an antichain")]
    NotAnAntichain(Vec<(usize, usize)>),

    #[error("bumps ({0}, {1}) and ({2}, {3}) are nested")]
    NestingBumps(usize, usize, usize, usize),

    #[error("malformed Dyck path: {0}")]
    MalformedPath(String),

    #[error("root set is not an order ideal: {0}")]
    NotAnIdeal(String),

    #[error("root {0} is not in the ideal")]
    RootNotInIdeal(String),

    #[error("not a Coxeter element: {0}")]
    NotACoxeterElement(String),

    #[error("element is not below the Coxeter element in absolute order: {0}")]
    NotBelowCoxeter(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
