use thiserror::Error;

/// Errors raised by the classifier, parsers and catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("outside the group universe: {0}")]
    OutOfUniverse(String),

    #[error("group parameters must be at least 1")]
    ZeroParameter,

    #[error("parameter overflow: {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("not a permutation: image {image} {reason}")]
    NotBijective { image: usize, reason: &'static str },

    #[error("order mismatch: cycles have order {actual} but m = {claimed}")]
    OrderMismatch { claimed: u64, actual: u64 },

    #[error("K{0} is not in the catalog")]
    NotFound(u64),

    #[error("catalog data error on line {line}: {msg}")]
    Catalog { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
