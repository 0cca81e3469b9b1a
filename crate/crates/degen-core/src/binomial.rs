//! Exact binomial coefficients and factorials, cached.
//!
//! The Pascal triangle is grown row by row under a single writer; completed
//! rows are immutable and shared by the Stirling, recurrence and generating
//! function modules.

use crate::rational::Rational;
use num_bigint::BigInt;
use once_cell::sync::Lazy;
use std::sync::RwLock;

static PASCAL: Lazy<RwLock<Vec<Vec<BigInt>>>> =
    Lazy::new(|| RwLock::new(vec![vec![BigInt::from(1)]]));

static FACTORIALS: Lazy<RwLock<Vec<BigInt>>> = Lazy::new(|| RwLock::new(vec![BigInt::from(1)]));

/// Binomial coefficient C(n, k) as an exact rational (integer-valued).
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::from_integer(BigInt::from(0));
    }
    {
        let rows = PASCAL.read().unwrap();
        if rows.len() > n {
            return Rational::from_integer(rows[n][k].clone());
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigInt::from(1));
        for i in 1..m {
            next.push(&prev[i - 1] + &prev[i]);
        }
        next.push(BigInt::from(1));
        rows.push(next);
    }
    Rational::from_integer(rows[n][k].clone())
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    {
        let cache = FACTORIALS.read().unwrap();
        if cache.len() > n {
            return cache[n].clone();
        }
    }
    let mut cache = FACTORIALS.write().unwrap();
    while cache.len() <= n {
        let next = cache.last().unwrap() * BigInt::from(cache.len());
        cache.push(next);
    }
    cache[n].clone()
}

/// n! as a rational scalar.
pub fn factorial_rational(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}
