use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or unreadable input; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A check did not pass; exit code 1.
    #[error("verification failed: {0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}
