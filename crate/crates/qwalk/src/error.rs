use thiserror::Error;

/// Errors raised by walk construction and asymptotic evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument fell outside its allowed range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested operation only exists for a restricted configuration
    /// (e.g. asymptotics demand a balanced coin, q = 1/2).
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// The configuration sits on (or too close to) a singular point of the
    /// requested formula.
    #[error("singular configuration: {0}")]
    Singular(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
