use std::path::PathBuf;

use perturbed_hardy::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const CONFIG: i32 = 2;
    pub const NUMERICAL: i32 = 3;
    pub const GATE: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{context}: {source}")]
    Core { context: String, source: CoreError },
}

impl CliError {
    pub fn core(context: impl Into<String>) -> impl FnOnce(CoreError) -> Self {
        let context = context.into();
        move |source| CliError::Core { context, source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => exit::CONFIG,
            CliError::Read { .. } | CliError::Write { .. } => exit::IO,
            CliError::Core { source, .. } => match source {
                CoreError::InvalidGrid { .. }
                | CoreError::NotContractive { .. }
                | CoreError::InvalidMass(_)
                | CoreError::DuplicatePoint { .. }
                | CoreError::InvalidShift { .. }
                | CoreError::InvalidTruncation(_)
                | CoreError::RejectBoundary { .. }
                | CoreError::Parse(_) => exit::CONFIG,
                _ => exit::NUMERICAL,
            },
        }
    }
}
