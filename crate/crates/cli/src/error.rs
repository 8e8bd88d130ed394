use desym_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("bad colouring document: {0}")]
    Json(String),

    #[error("{0}")]
    Usage(String),

    #[error("{failures} of {checked} checks failed")]
    Failed { failures: usize, checked: usize },
}

impl CliError {
    /// Process exit status: 2 for bad input, 3 for the excluded bicentred
    /// case, 4 for failed verification, 5 for exceeded bounds.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                CoreError::BicentredTreeUnsupported => 3,
                CoreError::Invariant(_) => 4,
                CoreError::BoundExceeded { .. }
                | CoreError::TooLarge(_)
                | CoreError::GroupTooLarge { .. } => 5,
                _ => 2,
            },
            CliError::Io { .. } | CliError::Json(_) | CliError::Usage(_) => 2,
            CliError::Failed { .. } => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
