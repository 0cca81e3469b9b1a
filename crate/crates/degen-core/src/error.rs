//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by exact series arithmetic, triangle queries and the
/// verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The series denominator is not invertible: after cancelling the common
    /// t-valuation (and any common λ-content), its constant term is not a
    /// nonzero rational.
    #[error("series division by a non-unit denominator")]
    DivisionByNonUnit,

    /// The denominator vanishes to higher order in t than the numerator, so
    /// the quotient would need negative powers of t.
    #[error("denominator t-valuation exceeds numerator t-valuation")]
    Valuation,

    /// Series composition F(g) requires g to have zero constant term.
    #[error("series composition requires the inner series to vanish at t = 0")]
    Composition,

    /// Triangle entry requested outside 0 <= k <= n.
    #[error("index out of range: entry ({n}, {k}) requires k <= n")]
    Index { n: usize, k: usize },

    /// The shift parameter r is a nonnegative integer everywhere.
    #[error("r must be nonnegative, got {0}")]
    NegativeR(i64),

    /// Brute-force enumeration is capped to keep runs at desk scale.
    #[error("enumeration size {size} exceeds the brute-force bound {bound}")]
    TooLarge { size: usize, bound: usize },

    /// A coefficient of t^n was requested from a series truncated below n.
    #[error("truncation order {order} is too low to read coefficient {n}")]
    OrderTooLow { order: usize, n: usize },

    /// An explicit initial sequence does not reach the requested index.
    #[error("explicit initial sequence of length {len} has no entry at index {index}")]
    InitialTooShort { len: usize, index: usize },

    /// `run_suite` was handed a suite name it does not know.
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    /// A rational or polynomial string could not be parsed.
    #[error("cannot parse `{0}` as an exact rational")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
