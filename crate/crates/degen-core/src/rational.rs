//! Exact rational scalars.
//!
//! Every quantity in this crate bottoms out in [`Rational`]: an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator. No floating point appears anywhere in the crate.

use crate::error::{Error, Result};
use num_bigint::BigInt;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact fraction n/d. Panics if d == 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(s.to_string()))
}
