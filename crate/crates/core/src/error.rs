use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index E[{i},{j}] out of range for gl_{n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("rank mismatch: gl_{left} vs gl_{right}")]
    RankMismatch { left: usize, right: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("term bound exceeded: {terms} terms > bound {bound}")]
    TermBound { terms: usize, bound: usize },

    #[error("tensor size {size} exceeds bound {bound}")]
    TensorBound { size: usize, bound: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight has {got} components, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("element is not central")]
    NotCentral,

    #[error("degenerate sample set: {0}")]
    Degenerate(String),

    #[error("no invertible intertwiner found: {0}")]
    NoIntertwiner(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
