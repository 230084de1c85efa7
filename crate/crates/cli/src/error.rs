use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const NOT_F_PURE: i32 = 2;
    pub const BUDGET_EXCEEDED: i32 = 3;
    pub const PARSE: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Core(#[from] lyubeznik_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("checkpoint {0} belongs to a different job")]
    CheckpointMismatch(String),

    #[error("checkpoint {path} is unreadable: {message}")]
    CheckpointCorrupt { path: String, message: String },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use lyubeznik_core::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Core(E::Parse { .. }) => exit::PARSE,
            CliError::Core(E::NotFPure) => exit::NOT_F_PURE,
            CliError::Core(E::BudgetExceeded(_)) => exit::BUDGET_EXCEEDED,
            _ => exit::FAILURE,
        }
    }
}
