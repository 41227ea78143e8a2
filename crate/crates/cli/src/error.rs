use std::fmt;

use kgscatter_core::Error as PhysicsError;

/// Error carried to `main`, mapped one-to-one onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Physics(PhysicsError),
    Io(std::io::Error),
    VerificationFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Physics(_) => 2,
            CliError::Io(_) => 3,
            CliError::VerificationFailed { .. } => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Physics(e) => write!(f, "error: {e}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
            CliError::VerificationFailed { failed, total } => {
                write!(f, "verification failed: {failed} of {total} checks")
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<PhysicsError> for CliError {
    fn from(e: PhysicsError) -> Self {
        match e {
            PhysicsError::InvalidParams(msg) => CliError::Usage(msg.to_string()),
            e => CliError::Physics(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
