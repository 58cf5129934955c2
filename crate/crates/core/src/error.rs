use crate::pack::Pack;
use thiserror::Error;

/// Errors shared by instance validation, the solvers, and the checkers.
///
/// Column and row numbers in messages are 1-based, matching the CLI output
/// convention; the carried fields stay 0-based like the rest of the API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix entry at row {}, column {} is {value}, expected 0 or 1", row + 1, col + 1)]
    NonBinaryMatrix { row: usize, col: usize, value: i64 },

    #[error("beta is {beta}, expected beta > 0")]
    NonPositiveBeta { beta: i64 },

    #[error("{what}: expected length {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{what} is {value}, outside the safe range [-{limit}, {limit}]")]
    MagnitudeOverflow {
        what: String,
        value: i64,
        limit: i64,
    },

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("pack {pack} has non-positive denominator d*x + beta = {denominator}")]
    NonPositiveDenominator { pack: Pack, denominator: i64 },

    #[error("pack {pack} is not feasible (some row is covered more than once)")]
    InfeasiblePack { pack: Pack },

    #[error("instance has {n} columns, limit is {max}")]
    InstanceTooLarge { n: usize, max: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("instance is not uniform: {0}")]
    NotUniform(String),

    #[error("condition not satisfied: {0}")]
    ConditionNotSatisfied(String),

    #[error("generation could not satisfy the requested condition within {attempts} attempts")]
    ConditionUnmet { attempts: u32 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
