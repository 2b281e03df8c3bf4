use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_SINGULAR: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid config: {field} {constraint}")]
    Validation { field: String, constraint: String },

    #[error("cannot read config {path}: {source}")]
    ConfigFile { path: String, source: std::io::Error },

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },

    #[error(transparent)]
    Core(#[from] hypnu::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Validation { .. } | CliError::ConfigFile { .. } | CliError::Usage(_) => {
                EXIT_CONFIG
            },
            CliError::Core(hypnu::Error::Singular { .. }) => EXIT_SINGULAR,
            CliError::Io { .. } | CliError::Core(_) => EXIT_INTERNAL,
        }
    }
}
