use thiserror::Error;

use crate::harness::registry::Hypothesis;
use crate::ideals::monoid::LawViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed Cayley-table text or fuzzy-subset literal. Lines and columns are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Format {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("element {element} out of range for a carrier of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("carrier mismatch: order {expected} vs order {found}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("grade chain mismatch: k={expected} vs k={found}")]
    ChainMismatch { expected: u8, found: u8 },

    #[error("grade level {level} outside chain k={resolution}")]
    GradeOutOfRange { level: usize, resolution: u8 },

    /// The request is well formed but exceeds what the tool is configured to handle.
    #[error("{what}: order {order} exceeds bound {bound}")]
    Capability {
        what: &'static str,
        order: usize,
        bound: usize,
    },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(Hypothesis),

    #[error("invalid argument: {0}")]
    Usage(String),

    /// A constructed structure broke one of its defining laws.
    #[error("law violated: {0}")]
    Law(Box<LawViolation>),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
