use thiserror::Error;

pub type Result<T, E = HvgError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HvgError {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("vertex {vertex} out of range 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid interval [{i}, {j}] on {n} vertices")]
    InvalidInterval { i: usize, j: usize, n: usize },

    #[error("vertex {0} has no neighbor")]
    NoNeighbor(usize),

    #[error("invalid edge {{{0}, {1}}}: {2}")]
    InvalidEdge(usize, usize, String),

    #[error("time stamps must be strictly increasing (position {0})")]
    InvalidTime(usize),

    #[error("graph is not realizable: {0}")]
    NotRealizable(String),

    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("arithmetic integrity failure: {0}")]
    ArithmeticIntegrity(String),
}

impl HvgError {
    pub(crate) fn parse_at(column: usize, message: impl Into<String>) -> Self {
        HvgError::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }
}
