use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("variable x{index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("unsupported arity {arity}: {reason}")]
    UnsupportedArity { arity: usize, reason: &'static str },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {what} (limit {limit}){}", alternative_hint(.alternative))]
    Capacity {
        what: String,
        limit: String,
        alternative: Option<&'static str>,
    },

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("Gray image is not linear: {0}")]
    NonlinearImage(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("internal construction check failed: {0}")]
    ConstructionBug(String),
}

fn alternative_hint(alt: &Option<&'static str>) -> String {
    match alt {
        Some(a) => format!("; use {a} instead"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn capacity(what: impl Into<String>, limit: impl ToString) -> Self {
        Error::Capacity {
            what: what.into(),
            limit: limit.to_string(),
            alternative: None,
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::Dimension { expected, found })
        }
    }
}
