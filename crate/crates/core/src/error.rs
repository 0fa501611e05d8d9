use thiserror::Error;

/// Errors raised by instance validation, parsing, the exhaustive oracles and
/// the reduction certifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed input: bad coordinates, out-of-range ids, negative weights.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Well-formed input that the requested problem is not defined on
    /// (odd color count, missing color class).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exhaustive search would enumerate more candidates than allowed.
    #[error("state budget exceeded: {predicted} candidates predicted, cap is {cap}")]
    BudgetExceeded { predicted: u128, cap: u64 },

    /// The reduction chain produced disagreeing feasibility answers.
    #[error("equivalence violated: {0}")]
    EquivalenceViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_input(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn invalid_instance(msg: impl Into<String>) -> Error {
    Error::InvalidInstance(msg.into())
}
