use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 1")]
    InvalidRank(usize),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight is not integral: {0}")]
    NonIntegral(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("signature is not weakly decreasing: {0:?}")]
    NonMonotone(Vec<i64>),

    #[error("signature is not self-dual: {0:?}")]
    NotSelfDual(Vec<i64>),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("rank {n} exceeds the enumeration limit {limit}")]
    RankOverLimit { n: usize, limit: usize },

    #[error("enumeration of {size} items exceeds the limit {limit}")]
    EnumerationLimit { size: u128, limit: u128 },

    #[error("height {height} exceeds the oracle bound {bound}")]
    OracleBudget { height: i64, bound: i64 },

    #[error("orbit dimension must be nonnegative, got {0}")]
    NegativeDimension(i64),

    #[error("unknown exceptional case {0:?} (expected F4 or G3)")]
    UnknownCase(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by exceeding a configured computation limit, as opposed
    /// to malformed input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::RankOverLimit { .. } | Error::EnumerationLimit { .. } | Error::OracleBudget { .. }
        )
    }
}
