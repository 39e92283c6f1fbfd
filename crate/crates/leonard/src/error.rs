use thiserror::Error;

use crate::parray::PaViolation;

/// Errors raised by the library. Arithmetic never silently produces a value
/// for an undefined operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("cannot parse {input:?} as an element of {field}")]
    Parse { input: String, field: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} does not belong to the field of the array")]
    NotInField(String),
    #[error("length mismatch: {0}")]
    Length(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a parameter array: {}", fmt_violations(.0))]
    InvalidArray(Vec<PaViolation>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypergeometric series: {0}")]
    Hypergeometric(String),
    #[error("matrix shape: {0}")]
    Shape(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

fn fmt_violations(v: &[PaViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
