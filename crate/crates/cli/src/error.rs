use thiserror::Error;

use offcenter_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("solver error: {0}")]
    Solver(CoreError),

    #[error("oracle error: {0}")]
    Oracle(CoreError),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed document: {0}")]
    Document(#[from] serde_json::Error),

    #[error("CSV mismatch against {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn solver(e: CoreError) -> Self {
        match e.root() {
            CoreError::Domain(msg) => CliError::Usage(msg.clone()),
            _ => CliError::Solver(e),
        }
    }

    pub fn oracle(e: CoreError) -> Self {
        match e.root() {
            CoreError::Domain(msg) => CliError::Usage(msg.clone()),
            _ => CliError::Oracle(e),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Document(_) => 2,
            CliError::Solver(_) => 3,
            CliError::Oracle(_) => 4,
            CliError::Io { .. } | CliError::Mismatch(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
