//! The free algebra k⟨x_1,…,x_n⟩ over Laurent coefficients with the
//! braiding data of U_q⁺(sl_{n+1}).
//!
//! * [`Word`], [`DegreeVector`], [`FreeElement`] — words, degrees and finite
//!   linear combinations.
//! * [`Bicharacter`] — p(i,j) = χ^i(g_j) in the one-parameter or the
//!   multiparameter family.
//! * [`skew_bracket`] — [u,v] = uv − p(u,v)·vu, and the Jacobi/ad
//!   identities in [`identities`].
//! * [`partial`], [`partial_star`], [`partial_braided`], [`d_w`] — the
//!   coordinate calculi.
//! * [`u_bracket`], [`psi`], [`u_pw`], [`BracketTerm`] — the PBW generators
//!   u[k,m] and Ψ^S(k,m) and their textual bracket form `[[x3,x2],x1]`.

mod bichar;
mod bracket;
mod calculus;
mod element;
mod error;
pub mod identities;
pub mod random;
mod word;

pub use bichar::{Bicharacter, Mode};
pub use bracket::{psi, psi_term, u_bracket, u_pw, u_term, BracketTerm, MAX_DEPTH};
pub use calculus::{d_w, partial, partial_braided, partial_star, scalar_part};
pub use element::{p_of, skew_bracket, FreeElement};
pub use error::FreeAlgError;
pub use word::{DegreeVector, Word};
