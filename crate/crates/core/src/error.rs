use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("singular pairing")]
    SingularPairing,
    #[error("weight bound exceeded: weight {weight} > bound {bound}")]
    WeightBoundExceeded { weight: usize, bound: usize },
    #[error("elements come from different presentations")]
    MixedPresentations,
    #[error("d∘d is not zero: {0}")]
    NotADifferential(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
