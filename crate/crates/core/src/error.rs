use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Integer overflow in board or sequence arithmetic.
    #[error("{0}")]
    Range(String),
    /// An argument outside an operation's domain (illegal subtraction, bad horizon, ...).
    #[error("{0}")]
    Domain(String),
    /// Interval refinement could not separate a value from an integer.
    #[error("{0}")]
    Precision(String),
    #[error("unknown key `{key}` (available: {available})")]
    Lookup { key: String, available: String },
    #[error("oracle refuses bound {bound}; guard is {guard}")]
    OracleGuard { bound: u64, guard: u64 },
    #[error("only 2-pile games are supported, got arity {0}")]
    Arity(usize),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable short code, used as the prefix of CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Range(_) => "range",
            Error::Domain(_) => "domain",
            Error::Precision(_) => "precision",
            Error::Lookup { .. } => "lookup",
            Error::OracleGuard { .. } => "oracle-guard",
            Error::Arity(_) => "arity",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
