use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial division is not exact (nonzero remainder)")]
    NonExactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("power series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("power series constant term must be 1 to take a reciprocal")]
    NonUnitConstantTerm,

    #[error("power series constant term must be 0 to take an exponential")]
    NonzeroConstantTerm,

    #[error("root counting interval endpoint {at} is a root even after widening")]
    EndpointIsRoot { at: String },

    #[error("step x must be nonzero (use the Euler-Maclaurin check for the x -> 0 limit)")]
    ZeroStep,

    #[error("family of order {available} is too short; order {needed} is required")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("coefficient table covers r <= {available}; r <= {needed} is required")]
    InsufficientTable { needed: usize, available: usize },

    #[error("need at least {needed} terms, got {available}")]
    InsufficientTerms { needed: usize, available: usize },

    #[error("window n = {n} is not divisible by step x = {x}")]
    NonDivisibleWindow { n: usize, x: usize },

    #[error("sample index {index} out of range for series of length {len}: {what}")]
    OutOfRange {
        index: usize,
        len: usize,
        what: &'static str,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },

    #[error("time series is empty")]
    EmptySeries,

    #[error("invalid input: {0}")]
    Invalid(String),
}
