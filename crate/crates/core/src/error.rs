use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid degree {0}: must be at least 1")]
    InvalidDegree(i64),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("character requested for partitions of different sizes ({rho} vs {mu})")]
    InvalidPair { rho: u32, mu: u32 },

    #[error("enumeration needs about {estimate} tuple extensions, budget is {budget}")]
    EnumerationTooLarge { estimate: u128, budget: u64 },

    #[error("wrong target: {0}")]
    WrongTarget(String),

    #[error("incomplete input: no series supplied for partition {0}")]
    IncompleteInput(String),

    #[error("inconsistent table: {0}")]
    InconsistentTable(String),

    #[error("word mismatch at junction {junction}: expected {expected}, found {found}")]
    WordMismatch {
        junction: usize,
        expected: String,
        found: String,
    },

    #[error("unknown isomorphism {0:?}")]
    UnknownIso(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDegree(_) => "invalid-degree",
            Error::InvalidPartition(_) => "invalid-partition",
            Error::InvalidProfile(_) => "invalid-profile",
            Error::InvalidPair { .. } => "invalid-pair",
            Error::EnumerationTooLarge { .. } => "enumeration-too-large",
            Error::WrongTarget(_) => "wrong-target",
            Error::IncompleteInput(_) => "incomplete-input",
            Error::InconsistentTable(_) => "inconsistent-table",
            Error::WordMismatch { .. } => "word-mismatch",
            Error::UnknownIso(_) => "unknown-iso",
            Error::Io(_) => "io",
            Error::Parse(_) => "parse",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
