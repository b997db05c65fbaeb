use thiserror::Error;

/// Errors raised by the library. Each variant maps onto one failure class of
/// the public operations; the CLI turns them into exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {index} does not belong to the group: {reason}")]
    ElementNotInGroup { index: usize, reason: String },

    #[error("list has {len} elements, subset enumeration cap is {cap}")]
    ListTooLarge { len: usize, cap: usize },

    #[error("enumeration needs {size} steps, cap is {cap}")]
    EnumerationTooLarge { size: String, cap: u64 },

    #[error("period {old} does not divide {new}")]
    NotAMultiple { old: u64, new: u64 },

    #[error("index {index} out of range for a list of length {len}")]
    BadIndex { index: usize, len: usize },

    #[error("vertex {vertex} out of range for a graph on {vertices} vertices")]
    BadVertexIndex { vertex: usize, vertices: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("operation requires a free group, got {0}")]
    FreeGroupRequired(String),

    #[error("element {0} of the localizing sublist is zero")]
    ZeroElementInS(usize),

    #[error("period does not fit in 64 bits")]
    PeriodOverflow,

    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { field: field.into(), message: message.into() }
    }

    /// True for errors caused by a configured size cap.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::ListTooLarge { .. } | Error::EnumerationTooLarge { .. } | Error::PeriodOverflow)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
