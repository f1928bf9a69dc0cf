use thiserror::Error;

use crate::arith::Field;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector of length {got} where {expected} coordinates were expected")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("zero vector does not span a line")]
    ZeroVector,
    #[error("enumeration needs {required} candidates but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("operation requires a finite field, got {0}")]
    FieldNotFinite(Field),
    #[error("precondition not met: {0}")]
    PreconditionUnmet(String),
    #[error("certificate failed re-verification: {0}")]
    CertificateRejected(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown algebra name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
