use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("substitution {rule} sends the denominator to zero")]
    Pole { rule: String },

    #[error("division is not exact, remainder {remainder}")]
    NonExactDivision { remainder: String },

    #[error("({r}, {s}) is not a coprime pair")]
    NotCoprime { r: i64, s: i64 },

    #[error("vector is not in the symmetric sign module: {0}")]
    OutsideSignModule(String),

    #[error("expected a Laurent polynomial, got {0}")]
    NotLaurent(String),

    #[error("invalid cable specification: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
