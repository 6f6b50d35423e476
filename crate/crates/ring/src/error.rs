use thiserror::Error;

/// Errors raised by the ring layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    /// An operand uses a variable outside the declared variable set.
    #[error("variable `{var}` is not in the declared variable set {{{declared}}}")]
    VariableMismatch { var: String, declared: String },
    /// Text could not be parsed as a Laurent polynomial.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// Matrix shapes do not fit together.
    #[error("shape mismatch: {0}")]
    Shape(String),
}
