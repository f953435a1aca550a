use thiserror::Error;

use crate::extract::Trace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// What went wrong on a given line of a graph, coloring, or certificate file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header (expected `{expected} <N>`)")]
    MalformedHeader { expected: &'static str },
    #[error("malformed line")]
    MalformedLine,
    #[error("vertex out of range in pair ({u},{v}) for {n} vertices")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("pair ({u},{v}) must satisfy u < v")]
    Unordered { u: usize, v: usize },
    #[error("duplicate pair ({u},{v})")]
    DuplicatePair { u: usize, v: usize },
    #[error("missing pair ({u},{v}); colorings must be total")]
    MissingPair { u: usize, v: usize },
    #[error("unexpected field (expected `{expected}`)")]
    UnexpectedField { expected: &'static str },
    #[error("unexpected end of input")]
    UnexpectedEof,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    /// The caller broke a documented precondition.
    #[error("invalid input: {0}")]
    Input(String),
    /// An inequality the underlying argument guarantees failed at runtime.
    #[error("logic error: {message}")]
    Logic { message: String, trace: Box<Trace> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn logic(msg: impl Into<String>, trace: &Trace) -> Self {
        Error::Logic {
            message: msg.into(),
            trace: Box::new(trace.clone()),
        }
    }

    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_) | Error::Parse(_) | Error::Io(_))
    }

    pub fn is_logic(&self) -> bool {
        matches!(self, Error::Logic { .. })
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        if self.is_logic() {
            3
        } else {
            2
        }
    }
}
