use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix data has {len} entries, expected {expected} for order {n}")]
    BadShape { n: usize, len: usize, expected: usize },

    #[error("rank {k} out of range 1..={n}! for order {n}")]
    RankOutOfRange { n: usize, k: u128 },

    #[error("order {0} is too large for lexicographic ranking")]
    OrderTooLarge(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("input is not a magic square")]
    NotMagic,

    #[error("operation requires even order, got {0}")]
    OddOrder(usize),

    #[error("operation undefined for order {0}")]
    UnsupportedOrder(usize),

    #[error("permutation {0} is not a magic classifying permutation matrix")]
    NotMcpm(String),

    #[error("permutation {0} is not a witness for this square")]
    NotWitness(String),

    #[error("2*mu = {mu2} is not divisible by n = {n}")]
    IndivisibleMagicNumber { mu2: String, n: usize },

    #[error("solution space is empty (dimension 0)")]
    EmptySolutionSpace,

    #[error("no integral square with mu/n = {0} exists")]
    NoIntegralSolution(String),

    #[error("eigensolver did not converge")]
    NoConvergence,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("missing fixture `{0}`")]
    MissingFixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
