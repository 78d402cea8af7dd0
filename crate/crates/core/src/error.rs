use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix shape {rows}x{cols} does not fit {len} entries")]
    BadShape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("minor order {k} out of range for a {rows}x{cols} matrix")]
    MinorOrder { k: usize, rows: usize, cols: usize },

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },

    #[error("invalid knot parameters: {0}")]
    InvalidParameters(String),

    #[error("covering degree must be at least 1")]
    ZeroDegree,

    #[error("not a valid Seifert pairing for this pipeline: det(V - V^t) = {det}")]
    InvalidSeifert { det: BigInt },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("closed form breaks down at n = {n}: {detail}")]
    TheoremViolation { n: u32, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
