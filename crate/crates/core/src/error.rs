use std::fmt;

use crate::family::{MlcifDiagnostic, PgsViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on the arguments does not hold.
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation was called on a value that breaks its contract.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A counting formula was asked for the branch it does not cover.
    #[error("wrong case: {0}")]
    WrongCase(String),

    /// The requested enumeration exceeds the configured budget.
    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid principal generating set: {}", Violations(.0))]
    InvalidPgs(Vec<PgsViolation>),

    #[error("not a maximal left-compressed intersecting family: {0}")]
    NotMlcif(MlcifDiagnostic),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

struct Violations<'a>(&'a [PgsViolation]);

impl fmt::Display for Violations<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
