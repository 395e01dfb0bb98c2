use thiserror::Error;

use crate::scalars::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live in different coefficient fields ({0} vs {1})")]
    MixedFieldTags(Field, Field),

    #[error("rational function has a pole at q = {0}")]
    PoleAtPoint(Rational),

    #[error("inadmissible psi-family: {n}_psi = 0")]
    InadmissibleFamily { n: usize },

    #[error("custom psi-family table has {len} entries, {n}_psi requested")]
    TableExhausted { n: usize, len: usize },

    #[error("negative index {0} into a psi-family")]
    NegativeIndex(i64),

    #[error("degree {degree} exceeds operator truncation {trunc}")]
    DegreeOutOfRange { degree: usize, trunc: usize },

    #[error("binomial denominator vanishes at degree {0}")]
    NonInvertibleDenominator(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("quantum-plane polynomials with different deformations ({0} vs {1})")]
    DeformationMismatch(String, String),

    #[error("unsupported field size {0} (expected 2 or 3)")]
    UnsupportedField(u32),

    #[error("dimension {n} too large for brute-force enumeration (limit {limit})")]
    SizeTooLarge { n: usize, limit: usize },

    #[error("syntax error at column {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
