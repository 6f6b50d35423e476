//! The triangular decomposition U_q(sl_{n+1}) = U⁻ ⊗ k[H] ⊗ U⁺: exact
//! straightening of positive past negative words, the Γ-graded skew bracket,
//! and verifiers for the commutators of PBW generators of opposite wings.

mod double;
mod error;
mod graded;
mod group;
mod membership;
pub mod suites;
mod tri;
mod verify;

pub use double::{Double, TriCanonical};
pub use error::DoubleError;
pub use graded::{graded_mul, p_graded, tri_bracket, Graded};
pub use group::GroupElement;
pub use membership::{in_triple, ClosureSpace, Everything, WingSpace};
pub use tri::{TriKey, TriangularElement};
pub use verify::{
    consistency_experiment, cross_bracket, cross_case, cross_inclusion, derm_expected, one_minus, pair_closure,
    psi_minus, psi_plus, rela3_check, sh_bracket, sh_scalar, verify_cross, verify_derm, verify_sh, ConsistencyReport,
    CrossCase, PairOutcome,
};
