use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("unknown job `{0}`")]
    UnknownJob(String),
    /// A declared structure that fails its axioms; jobs report this as a
    /// failure with the message as witness.
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] cocontra::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn parse(e: &serde_json::Error) -> Self {
        let text = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: text.strip_suffix(&suffix).unwrap_or(&text).to_string(),
        }
    }

    /// Exit code when the error escapes a whole run.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Validation(_) | CliError::UnknownJob(_) => 2,
            CliError::Io { .. } => 2,
            CliError::Invalid(_) => 1,
            CliError::Core(_) => 1,
        }
    }
}
