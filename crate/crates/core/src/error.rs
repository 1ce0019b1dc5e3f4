use thiserror::Error;

/// Errors raised by the conversions, arithmetic and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value does not fit in the machine natural (`u64`).
    #[error("range error: {0}")]
    Range(String),
    /// The operation is undefined on its argument (predecessor of zero, `0^0`, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Subtraction would produce a negative result.
    #[error("underflow: subtrahend exceeds minuend")]
    Underflow,
    /// Malformed textual or bit input; `pos` is the offending position.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// Wrong usage of a multi-argument interface.
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn overflow(what: &str) -> Self {
        Error::Range(format!("{what} exceeds the 64-bit natural range"))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
