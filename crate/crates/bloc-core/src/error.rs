//! Crate-wide error type.

use alloc::string::String;

/// Errors shared by every module of the crate.
///
/// `Consistency` is special: it never reflects bad input, only a broken
/// internal identity (an inexact character-projection division, a negative
/// multiplicity, a failed commutator in the oracle).  Seeing one means a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A sequence that is not weakly decreasing or contains a non-positive
    /// part was offered as a partition.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Two arguments that must partition (or sum to) the same integer do not.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// A configured size limit was exceeded.
    #[error("limit exceeded: {what} requires {requested}, limit is {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// An oracle construction would exceed the dimension budget.
    #[error("oracle budget exceeded: {what} needs {requested}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        requested: usize,
        budget: usize,
    },

    /// A weight that must be dominant is not.
    #[error("weight {0} is not dominant")]
    NonDominant(String),

    /// A node index outside `1..=rank`.
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// An unsupported (type, rank) combination.
    #[error("no simple root system of type {0} and rank {1}")]
    BadRootSystem(char, usize),

    /// An exact identity failed inside the library; indicates a bug, not
    /// bad input.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
