use thiserror::Error;

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code when a computed invariant fails.
pub const EXIT_INVARIANT: i32 = 1;
/// Exit code for unreadable or invalid input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error at {field}: {constraint}")]
    Input { field: String, constraint: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("computation failed: {0}")]
    Compute(jz_core::Error),
}

impl CliError {
    pub fn input(field: &str, constraint: impl Into<String>) -> CliError {
        CliError::Input {
            field: field.to_string(),
            constraint: constraint.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input { .. } | CliError::Io { .. } => EXIT_INPUT,
            CliError::Compute(_) => EXIT_INVARIANT,
        }
    }
}

impl From<jz_core::Error> for CliError {
    fn from(e: jz_core::Error) -> CliError {
        match e {
            jz_core::Error::DegreeBoundTooSmall(_) => CliError::input("degree", e.to_string()),
            jz_core::Error::Input { field, message } => CliError::Input {
                field,
                constraint: message,
            },
            other => CliError::Compute(other),
        }
    }
}
