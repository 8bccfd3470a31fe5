use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("generator index must be >= 1")]
    ZeroIndex,
    #[error("exponent must be >= 1")]
    ZeroExponent,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand count must be >= 2, got {0}")]
    TooFewStrands(usize),
    #[error("word too long for exhaustive search ({len} letters, limit {limit})")]
    ExhaustiveTooLong { len: usize, limit: usize },
    #[error("enumeration family exceeds cap of {0} words")]
    FamilyTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, BraidError>;
