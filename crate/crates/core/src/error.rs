use thiserror::Error;

use crate::framework::{ElementId, ValidationReport};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Reference,
    Redeclaration,
}

/// A frame document error with its 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid identifier `{0}`")]
    InvalidId(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid framework: {0}")]
    Invalid(ValidationReport),
    #[error("enumeration needs {required} assignments but the cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("unbound variable `{0}`")]
    Unbound(ElementId),
    #[error("value {value} of `{id}` is outside [0, 1]")]
    OutOfRange { id: String, value: f64 },
    #[error("partial labelling: no value for `{0}`")]
    Partial(ElementId),
    #[error("`{0}` is not a labellable element")]
    NotLabellable(ElementId),
    #[error("labellings do not share one domain")]
    MixedDomain,
    #[error("{0} requires a nonempty sequence")]
    Empty(&'static str),
    #[error("invalid solver configuration: {0}")]
    Config(String),
}
