use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("parameter error: {0}")]
    Param(String),

    /// Malformed graph6 input.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A search ran past its deadline or was cancelled.
    #[error("budget exhausted")]
    Budget,

    /// An exhaustive check found a graph that breaks a bound.
    #[error("bound violated by {graph6}: observed {observed} > bound {bound} ({context})")]
    Violation {
        context: String,
        graph6: String,
        observed: u128,
        bound: String,
    },

    /// An exhaustive check found a bound that is not attained, or an
    /// extremal graph outside the expected family.
    #[error("mismatch in {context}: expected {expected}, observed {observed}")]
    Mismatch {
        context: String,
        expected: String,
        observed: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Param(msg.into()))
}
