use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} variables vs {right} variables")]
    Dimension { left: usize, right: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division, offending remainder term {coef}*x^{exponents:?}")]
    NotDivisible { exponents: Vec<i32>, coef: String },

    #[error("not in span: {0}")]
    NotInSpan(String),

    #[error("wrong alphabet: expected {expected}, found {found}")]
    WrongAlphabet { expected: &'static str, found: String },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, lo: usize, hi: usize) -> Result<()> {
    if index < lo || index > hi {
        Err(Error::IndexOutOfRange { index, lo, hi })
    } else {
        Ok(())
    }
}
