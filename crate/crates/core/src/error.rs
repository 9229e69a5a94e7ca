use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that could not be checked at all: wrong lengths, indices out of
    /// range, unparsable scalars.
    #[error("malformed {field}: {detail}")]
    Malformed { field: String, detail: String },

    /// A size guard tripped before any work was done.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Input was well-formed but fails a precondition axiom.
    #[error("{what} rejected: {report}")]
    Rejected { what: String, report: ValidationReport },

    #[error("{0}")]
    Precondition(String),
}

impl Error {
    pub fn malformed(field: impl Into<String>, detail: impl Into<String>) -> Error {
        Error::Malformed { field: field.into(), detail: detail.into() }
    }

    pub fn rejected(what: impl Into<String>, report: ValidationReport) -> Error {
        Error::Rejected { what: what.into(), report }
    }

    /// `true` for errors that mean "could not check" rather than "checked and failed".
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Malformed { .. } | Error::ResourceLimit(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
