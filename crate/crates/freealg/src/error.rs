use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("element is not homogeneous in the letter grading")]
    NotHomogeneous,
    #[error("letter x{letter} is outside x1..x{n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("interval [{k},{m}] is not a valid degree for rank {n}")]
    BadInterval { n: usize, k: usize, m: usize },
    #[error("invalid bicharacter: {0}")]
    Bicharacter(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
