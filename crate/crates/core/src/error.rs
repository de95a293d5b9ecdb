use alloc::string::String;
use core::fmt;

/// Errors surfaced by exact arithmetic and the algebra construction.
///
/// `DegenerateParameter` carries the name of the vanishing quantity so callers
/// can report (or resample around) the exact obstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division by an exact zero.
    DivisionByZero,
    /// A parameter combination makes a required quantity vanish.
    DegenerateParameter(String),
    /// Structurally invalid input (wrong sizes, broken constraints).
    InvalidParameter(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::DegenerateParameter(what) => {
                write!(f, "degenerate parameters: {what} vanishes")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameters: {what}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}
