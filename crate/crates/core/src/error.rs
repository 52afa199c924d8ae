use thiserror::Error;

/// Errors produced by the graph kernel, the constructions and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A graph (or an intermediate host graph) would exceed the kernel's order cap.
    #[error("graph order {order} exceeds the cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    /// Malformed textual input. `offset` is the byte position of the first offending byte.
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    /// A parameter falls outside the hypothesis of the requested operation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An exact search refused to start (or gave up) because its budget would be exceeded.
    #[error("resource guard exceeded for {what}: {detail}")]
    Resource { what: String, detail: String },

    /// A structural invariant did not hold; signals a bug upstream of the caller.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(offset: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            reason: reason.into(),
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Resource {
            what: what.into(),
            detail: detail.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
