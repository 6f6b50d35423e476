//! Parameter-free combinatorics of right coideal subalgebras of
//! U_q⁺(sl_{n+1}) containing the group algebra.
//!
//! * [`RootSequence`] — the root sequence θ = (θ_1,…,θ_n) with
//!   0 ≤ θ_k ≤ n−k+1.
//! * [`RTProfile`] — the recursively defined sets R_k ⊆ T_k ⊆ [k,n], stored as
//!   bitmasks (bit `i` stands for the integer `i`).
//! * [`GenDesc`] — a descriptor (k, m, S) naming the PBW generator Ψ^S(k,m),
//!   with its black/white point diagram.
//! * classification predicates (Hopf, ad_r-invariance, K(π)), the pair
//!   condition for the full quantum group, and the counting engine.

mod bits;
mod claims;
mod classify;
mod count;
mod error;
mod gendesc;
mod pair;
mod rcs;
mod rt;
mod theta;

pub use bits::{mask_from, mask_to_vec, Mask};
pub use claims::{check_claims, ClaimViolation};
pub use classify::{is_adr_invariant, is_hopf, kpi_of, max_hopf, theta_of_kpi, u1_descriptors, GroupWord};
pub use count::{count_borel, count_full, count_full_naive, count_full_with_progress, FullCount};
pub use error::RootError;
pub use gendesc::{DiagramStyle, GenDesc};
pub use pair::{cond_pair, cell_verdict, CellVerdict, PairReport};
pub use rcs::{generated_theta, rcs_generators, root_set_of_generator, RootTable};
pub use rt::{build_rt, roots_of, simple_roots_of, RTProfile, RootInterval};
pub use theta::{enumerate_theta, RootSequence};
