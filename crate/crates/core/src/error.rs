use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("invalid interval [{left}..{right}]: left extreme exceeds right extreme")]
    InvalidInterval { left: i64, right: i64 },

    #[error("universe size must be positive, got {0}")]
    InvalidUniverse(i64),

    #[error("interval [{left}..{right}] lies outside the universe {{0..{}}}", .size - 1)]
    OutOfUniverse { left: i64, right: i64, size: i64 },

    #[error("intervals are not a normalized antichain: {0}")]
    NotNormalized(String),

    #[error("{0} has no finite symbolic form over an unbounded universe")]
    Unrepresentable(&'static str),

    #[error("{what} requires n <= {limit}, got {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("cannot parse antichain: {0}")]
    Parse(String),
}

pub type Result<T, E = LatticeError> = std::result::Result<T, E>;
