//! Shared error type for the whole crate.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two elements that must share an ambient rank do not.
    #[error("mismatched rank: {0} vs {1}")]
    MismatchedRank(usize, usize),
    /// The requested family/rank combination is not supported.
    #[error("unsupported rank {n} for family {family}")]
    UnsupportedRank { family: String, n: usize },
    /// An element violates the membership invariant of the stated group.
    #[error("element is not in the stated group: {0}")]
    NotInGroup(String),
    /// A type-D element whose bar-closed cycles are not in the paired shape
    /// (zero cycles, or two of which one has length one).
    #[error("element has bar-closed cycles outside the paired shape: {0}")]
    UnpairedBCycles(String),
    /// `parabolic_type` was asked about an element not below the Coxeter element.
    #[error("element is not below the Coxeter element in absolute order: {0}")]
    NotBelowCoxeter(String),
    /// Parse failure, with a byte position into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// An enumeration was requested beyond the configured size guard.
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    /// The requested flavor is not defined for this family.
    #[error("flavor unavailable: {0}")]
    FlavorUnavailable(String),
    /// A type tuple contains a component the requested family cannot contain.
    #[error("invalid type for this operation: {0}")]
    InvalidType(String),
    /// Rank bookkeeping of the inputs is inconsistent with the family constraint.
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    /// A rank vector is inconsistent (wrong sum, negative entry, ...).
    #[error("inconsistent ranks: {0}")]
    InconsistentRanks(String),
    /// Unknown exceptional group tag.
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    /// A quotient with zero denominator was requested.
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    /// Series division by a non-unit (zero constant term).
    #[error("not a unit: {0}")]
    NotAUnit(String),
    /// Series composition with an inner series having nonzero constant term.
    #[error("bad composition: {0}")]
    BadComposition(String),
    /// A precondition of the inversion engine was violated.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// A determinant identity was evaluated at a point with vanishing denominator.
    #[error("singular evaluation point: {0}")]
    SingularPoint(String),
    /// A partition block has a size not divisible by the divisibility parameter.
    #[error("bad block size: {0}")]
    BadBlockSize(String),
    /// A verification suite found a counterexample.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}
