use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(mathieu_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 4,
        }
    }
}

impl From<mathieu_core::Error> for CliError {
    fn from(e: mathieu_core::Error) -> Self {
        if e.is_domain() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Numeric(e)
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
