use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus has degree {got}, expected {want}")]
    BadModulusDegree { got: usize, want: usize },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("field size p^N = {0} exceeds the word budget")]
    FieldTooLarge(u128),
    #[error("no primitive element found (internal fault)")]
    NoPrimitiveElement,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent linear system (corrupted input)")]
    InconsistentSystem,
    #[error("generator matrix is rank deficient")]
    RankDeficientGenerator,
    #[error("no annihilator of degree <= {0}; raise the cap")]
    NoAnnihilator(usize),
    #[error("search budget of {0} candidates exhausted; try a larger field")]
    SearchBudgetExhausted(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("erasure address out of range: cell ({0},{1}) coord {2}")]
    EraseOutOfRange(usize, usize, usize),
    #[error("unknown pattern name: {0}")]
    UnknownPattern(String),
    #[error("grid is not a codeword (inconsistent)")]
    NotACodeword,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
