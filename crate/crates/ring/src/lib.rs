//! Exact coefficient arithmetic for the coideal engine.
//!
//! * [`Rational`] — arbitrary-precision reduced fractions (re-exported from
//!   `num-rational`).
//! * [`LaurentPoly`] — sparse multivariate Laurent polynomials over ℚ in the
//!   universal variable family `q, t1, t2, …` (variable `ti` stands for the
//!   multiparameter value `t_{i,i+1}`).
//! * [`ExactMatrix`] — fraction-free (Bareiss) rank and solve over the
//!   fraction field of the Laurent ring, with a modular evaluation fast path.
//! * [`Echelon`] — an incremental, exact row-echelon span used for all
//!   membership and span-equality questions downstream.

mod echelon;
mod error;
mod matrix;
mod modp;
mod monomial;
mod poly;
mod text;

pub use echelon::{Echelon, SparseVec};
pub use error::RingError;
pub use matrix::{ExactMatrix, Solution, SolveOutcome};
pub use modp::{ModPoint, MODULUS};
pub use monomial::Monomial;
pub use poly::LaurentPoly;
pub use text::{var_index, var_name, VarSet};

/// Arbitrary-precision rational number; always reduced with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for a small rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
