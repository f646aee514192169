use serde_json::Value;
use thiserror::Error;

/// Errors raised by the library.
///
/// Failed structural checks that are part of a verification report are not
/// errors; they are recorded as report entries. `Verification` is used only
/// where a constructor refuses to produce a value.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    ConductorMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid conductor {0}: must be positive")]
    InvalidConductor(usize),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("verification failed: {check}")]
    Verification { check: String, witness: Value },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {required} matrix entries required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn verification(check: impl Into<String>, witness: Value) -> Self {
        Error::Verification {
            check: check.into(),
            witness,
        }
    }
}
