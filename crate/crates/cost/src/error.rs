use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CostError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("N must be prime (got {0})")]
    NotPrime(usize),

    #[error("method {0} needs a strip height")]
    MissingStripHeight(&'static str),

    #[error("unknown method {0:?}")]
    UnknownMethod(String),
}
