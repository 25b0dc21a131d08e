use thiserror::Error;

/// Errors raised by table construction, ingestion and the numeric routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("galois exponent {k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("table failed validation: {0}")]
    Invalid(String),
    #[error("p = {p} does not divide the group order")]
    PrimeNotDividing { p: u64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("identity check failed: {0}")]
    Identity(String),
    #[error("search failed: {0}")]
    Search(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
