use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input structure: bad indices, width mismatches, wrong child counts.
    #[error("structural error: {0}")]
    Structure(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("no legal progressing query under model {0}")]
    Unsolvable(String),

    /// A construction hit a state its certificate says cannot occur.
    #[error("certificate violation: {0}")]
    CertificateViolation(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("cap exceeded: {0}")]
    Cap(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::Budget(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
