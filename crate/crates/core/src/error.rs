use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("order {n} exceeds the search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

/// Where a parse error happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Byte(usize),
    Line(usize),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Byte(b) => write!(f, "byte {b}"),
            Location::Line(l) => write!(f, "line {l}"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn at_byte(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { location: Location::Byte(offset), message: msg.into() }
    }

    pub(crate) fn at_line(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { location: Location::Line(line), message: msg.into() }
    }
}
