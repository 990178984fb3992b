use thiserror::Error;

/// Everything that ends a run early. Parity failures are not errors; they are
/// reported through [`Outcome`](crate::Outcome).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] ucr_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => crate::EXIT_USAGE,
            CliError::Compute(_) | CliError::Io(_) => crate::EXIT_COMPUTE,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
