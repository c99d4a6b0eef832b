use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid path decomposition: {0}")]
    InvalidPathDecomposition(String),

    #[error("{what} refuses inputs larger than {limit} (got {actual})")]
    ScaleGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("memory guard exceeded after exploring {explored} subsets (limit {limit})")]
    MemoryGuard { explored: usize, limit: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid membership set {input:?}: {reason}")]
    Membership { input: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn contract(message: impl Into<String>) -> Self {
        Error::Contract(message.into())
    }
}
