use thiserror::Error;

use crate::setcore::KSet;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invariant violation at {location}: {message}")]
    InvariantViolation { location: String, message: String },

    #[error("family is not {t}-intersecting")]
    NotTIntersecting { t: u32 },

    #[error("adjacency is undefined for identical sets {0}")]
    IdenticalSets(KSet),

    #[error("construction infeasible: {0}")]
    ConstructionInfeasible(String),

    #[error("decomposition invalid: member {member} is not covered by any piece")]
    DecompositionInvalid { member: KSet },

    /// The requested exhaustive run exceeds the configured instance cap.
    #[error("infeasible exhaustive run: {instances} instances exceed the cap of {cap}")]
    Infeasible { instances: u128, cap: u128 },

    #[error("search budget exhausted before {0} was certified")]
    BudgetExhausted(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
