use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("rank n must satisfy 1 <= n <= 63, got {0}")]
    BadRank(usize),
    #[error("theta has length {len}, expected n = {n}")]
    BadLength { n: usize, len: usize },
    #[error("theta_{k} = {value} violates 0 <= theta_k <= n-k+1 = {max}")]
    OutOfBounds { k: usize, value: usize, max: usize },
    #[error("descriptor (k={k}, m={m}) violates 1 <= k <= m <= n = {n}")]
    BadDescriptor { n: usize, k: usize, m: usize },
    #[error("profiles have different ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("no ad_r-invariant root sequence corresponds to the given subset")]
    NoInvariantTheta,
    #[error("the generated subalgebra is not unique: {0}")]
    Ambiguous(String),
}
