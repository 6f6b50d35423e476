use atlas_freealg::FreeAlgError;
use atlas_nichols::NicholsError;
use atlas_rootdata::RootError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleError {
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("element is not homogeneous in the H-grading")]
    NotHomogeneous,
    #[error("group element has length {got}, expected {expected}")]
    GroupShape { got: usize, expected: usize },
    #[error("index {i} outside [{k}, {m}]")]
    BadIndex { i: usize, k: usize, m: usize },
}
