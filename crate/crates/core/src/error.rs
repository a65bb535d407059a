use thiserror::Error;

use crate::weight::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank m = {m} is not allowed for type {family}")]
    InvalidRank { family: char, m: usize },

    #[error("weight has {found} ε-coordinates, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("({0}) is not dominant integral")]
    NotDominant(Weight),

    #[error("ε-part of ({0}) is not a dominant integral o(n) weight")]
    NotOrthogonalDominant(Weight),

    #[error("({0}) is not integral")]
    NotIntegral(Weight),

    #[error("({0}) is atypical")]
    Atypical(Weight),

    #[error("({weight}) is not in the domain of {operation}: {reason}")]
    OutOfDomain {
        operation: &'static str,
        weight: Weight,
        reason: String,
    },

    #[error("{0} is not an odd root other than ±δ")]
    NotOddRoot(Weight),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(
        operation: &'static str,
        weight: &Weight,
        reason: impl Into<String>,
    ) -> Self {
        Error::OutOfDomain {
            operation,
            weight: weight.clone(),
            reason: reason.into(),
        }
    }
}
