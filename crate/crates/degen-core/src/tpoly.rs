//! Exact polynomials in t with λ-polynomial coefficients.
//!
//! These carry the test functions that the degenerate operator calculus acts
//! on: differentiation and evaluation at rational t are exact, so operator
//! identities become finite coefficient-wise checks.

use crate::lambda_poly::LambdaPoly;
use crate::rational::{rat, Rational};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in t over [`LambdaPoly`], trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TPoly {
    coeffs: Vec<LambdaPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LambdaPoly::one())
    }

    pub fn constant(c: LambdaPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial t.
    pub fn t() -> Self {
        Self::from_coeffs(vec![LambdaPoly::zero(), LambdaPoly::one()])
    }

    /// The binomial t - 1.
    pub fn t_minus_one() -> Self {
        Self::from_coeffs(vec![
            LambdaPoly::constant(rat(-1)),
            LambdaPoly::one(),
        ])
    }

    pub fn from_coeffs(coeffs: Vec<LambdaPoly>) -> Self {
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(LambdaPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> LambdaPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact formal derivative d/dt.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&rat(i as i64)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Exact Horner evaluation at a rational t-value.
    pub fn eval(&self, t: &Rational) -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(t) + c;
        }
        acc
    }

    /// Constant coefficient, i.e. the value at t = 0.
    pub fn at_zero(&self) -> LambdaPoly {
        self.coeff(0)
    }

    pub fn scale_poly(&self, c: &LambdaPoly) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![LambdaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn derivative_and_eval() {
        // f = t^2 - 3t
        let f = TPoly::from_coeffs(vec![
            LambdaPoly::zero(),
            LambdaPoly::constant(rat(-3)),
            LambdaPoly::one(),
        ]);
        let df = f.derivative();
        assert_eq!(
            df,
            TPoly::from_coeffs(vec![LambdaPoly::constant(rat(-3)), LambdaPoly::constant(rat(2))])
        );
        assert_eq!(f.eval(&ratio(1, 2)), LambdaPoly::constant(ratio(-5, 4)));
        assert_eq!(f.at_zero(), LambdaPoly::zero());
    }

    #[test]
    fn t_minus_one_powers() {
        let p = TPoly::t_minus_one().pow(2);
        assert_eq!(
            p,
            TPoly::from_coeffs(vec![
                LambdaPoly::one(),
                LambdaPoly::constant(rat(-2)),
                LambdaPoly::one(),
            ])
        );
        assert_eq!(TPoly::t_minus_one().pow(0), TPoly::one());
    }

    #[test]
    fn product_matches_expansion() {
        // (t - 1)(t + 1) = t^2 - 1
        let a = TPoly::t_minus_one();
        let b = TPoly::from_coeffs(vec![LambdaPoly::one(), LambdaPoly::one()]);
        assert_eq!(
            &a * &b,
            TPoly::from_coeffs(vec![
                LambdaPoly::constant(rat(-1)),
                LambdaPoly::zero(),
                LambdaPoly::one(),
            ])
        );
    }
}
