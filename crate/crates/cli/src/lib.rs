//! Library surface of the `braidtn` CLI: command implementations, exact
//! serialization formats and seeded sampling, kept separate from the binary
//! so integration tests can drive them directly.

pub mod commands;
pub mod format;
pub mod params;
pub mod sampling;

use braidtn_core::Error;

/// Exit-code contract: 0 all checks pass, 1 a mathematical check failed,
/// 2 degenerate input, 64 usage error.
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Degenerate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Degenerate(_) => EXIT_DEGENERATE,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Degenerate(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) => CliError::Usage(format!("{e}")),
            _ => CliError::Degenerate(format!("{e}")),
        }
    }
}
