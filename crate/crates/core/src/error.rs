//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("row {row} has length {got}, expected {expected}")]
    RaggedInput { row: usize, expected: usize, got: usize },
    #[error("row {row}, column {col}: unexpected character {ch:?}")]
    BadChar { row: usize, col: usize, ch: char },
    #[error("pattern does not fit in host")]
    PatternTooLarge,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("part size {n} too large for exhaustive sweep (max {max})")]
    TooLarge { n: usize, max: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error("top vertex {vertex} has degree {degree} >= {bound}")]
    DegreeTooHigh { vertex: usize, degree: usize, bound: usize },
    #[error("pattern is exceptional ({0}); no linear extractor is known")]
    ExceptionalPattern(String),
    #[error("pattern is not strongly acyclic; no linear bound exists")]
    NotStronglyAcyclic,
    #[error("bad pattern parameters: {0}")]
    BadPattern(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("n = {n} must be divisible by {modulus}")]
    BadModulus { n: usize, modulus: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("generation budget exhausted after {attempts} attempts")]
    Timeout { attempts: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
}
