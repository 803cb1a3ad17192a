use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Compute(#[from] tridiag_pow::Error),

    /// A residual check breached its tolerance; the message names the case.
    #[error("{0}")]
    CheckFailed(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use tridiag_pow::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(E::InvalidSpec(_) | E::WrongFamily { .. } | E::IndexOutOfRange { .. }) => {
                EXIT_USAGE
            }
            _ => EXIT_FAILURE,
        }
    }
}
