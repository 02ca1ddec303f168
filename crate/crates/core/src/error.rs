use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("not a loop: {0}")]
    NotALoop(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("network contains an oriented cycle through {0:?}")]
    Cyclic(String),
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("wrong surface: {0}")]
    Surface(String),
    #[error("bracket does not close on the generators: {0}")]
    NotClosed(String),
    #[error("skew-symmetry condition violated: {0}")]
    SkewViolated(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
