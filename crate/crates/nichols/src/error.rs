use atlas_freealg::FreeAlgError;
use atlas_ring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("PBW monomials do not span the element: {0}")]
    Inconsistent(String),
    #[error("element does not have the required shape: {0}")]
    Shape(String),
}
