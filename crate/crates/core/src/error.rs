use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid edge {0}-{1}: {2}")]
    InvalidEdge(usize, usize, String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("group mismatch: {0}")]
    Group(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("exhaustive search needs {needed} assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    /// A theorem check failed with its hypotheses satisfied. `reproducer`
    /// holds the offending gain file.
    #[error("falsified {theorem}: {detail}")]
    Falsified {
        theorem: String,
        detail: String,
        reproducer: String,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
