//! The Nichols algebra U_q⁺(sl_{n+1}) at generic q, realised inside the
//! quantum shuffle algebra.
//!
//! * [`Nichols`] — the shuffle embedding Ω (the equality oracle), the
//!   braided shuffle product and [`deconcat`].
//! * [`pbw_monomials`], [`Nichols::pbw_decompose`] — the PBW basis of
//!   super-letters u[k,m].
//! * [`SubalgebraSpan`], [`member`] — generated subalgebras per
//!   multidegree, exact membership.
//! * [`coideal_check`], [`differential_closure_check`],
//!   [`theorem26_span_check`], [`psi_from_element`] — the coideal
//!   verifiers.
//! * [`suites`] — the exhaustive and randomised verification suites.

mod canonical;
mod coideal;
mod error;
mod omega;
mod pbw;
mod span;
pub mod suites;
mod verdict;

pub use canonical::CanonicalElement;
pub use coideal::{
    coideal_check, differential_closure_check, dual_span_check, profile_generators, psi_from_element,
    separated, theorem26_span_check, w_set,
};
pub use error::NicholsError;
pub use omega::{deconcat, shuffle_product, Nichols};
pub use pbw::{pbw_monomials, PbwCoordinates, PbwMonomial, SuperLetter};
pub use span::{canonical_degree, member, subalgebra_basis, DerivativeClosure, SubalgebraSpan, DEFAULT_BOUND};
pub use verdict::Verdict;
