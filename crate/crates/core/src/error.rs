use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor in reduction position")]
    ZeroReducer,
    #[error("invalid modulus {0}: need m >= 2")]
    BadModulus(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("vectors of mixed length ({0} vs {1})")]
    MixedLength(usize, usize),
    #[error("rewriting exceeded {0} steps")]
    StepLimit(usize),
    #[error("rule {0} is not decreasing")]
    NotDecreasing(String),
    #[error("rewriting system is not locally confluent: {0}")]
    NotConfluent(String),
    #[error("multiplication table is not associative: {0}")]
    NotAssociative(String),
    #[error("table is missing the product {0}")]
    IncompleteTable(String),
    #[error("ordering: {0}")]
    Ordering(String),
    #[error("reductive relation: {0}")]
    Reductive(String),
    #[error("stability probe failed: {0}")]
    Unstable(String),
    #[error("coefficient domain {0} cannot carry a function ring")]
    UnsupportedDomain(String),
    #[error("coefficient {0} is not representable in {1}")]
    NotRepresentable(String, String),
    #[error("universe has no unit element")]
    NoUnit,
    #[error("{0} requires a commutative ring")]
    NotCommutative(&'static str),
    #[error("{0}")]
    Unsupported(String),
    #[error("budget of {0} exhausted")]
    Budget(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
