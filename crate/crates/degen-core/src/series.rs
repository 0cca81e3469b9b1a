//! Truncated formal power series in t with λ-polynomial coefficients.
//!
//! Series carry ordinary coefficients; the exponential convention is isolated
//! in [`TruncSeries::egf_coeff`], which multiplies by n!. Binary operations
//! truncate to the minimum operand order, matching formal-series semantics;
//! callers assert the order they need explicitly.
//!
//! Division is a unit division after cancelling the common t-valuation. When
//! the shifted denominator's constant term is still divisible by λ, the
//! common λ-content of numerator and denominator is cancelled as well (the
//! ratio defining the fully degenerate Bernoulli series needs exactly this);
//! anything less tractable than that is a [`Error::DivisionByNonUnit`].

use crate::binomial::factorial_rational;
use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{rat, ratio, Rational};
use std::ops::{Add, Mul, Neg, Sub};

/// Formal power series in t truncated at `order` (inclusive): coefficients of
/// t^0 .. t^order are known exactly, everything above is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<LambdaPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![LambdaPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LambdaPoly::one(), order)
    }

    pub fn constant(c: LambdaPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// c · t^k truncated at `order`.
    pub fn monomial(c: LambdaPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Build from the first `order + 1` ordinary coefficients; missing ones
    /// are zero, extras are dropped.
    pub fn from_coeffs(order: usize, coeffs: Vec<LambdaPoly>) -> Self {
        let mut c = coeffs;
        c.resize(order + 1, LambdaPoly::zero());
        c.truncate(order + 1);
        TruncSeries { order, coeffs: c }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> LambdaPoly) -> Self {
        TruncSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Ordinary coefficient of t^n. Panics when n exceeds the order.
    pub fn coeff(&self, n: usize) -> &LambdaPoly {
        &self.coeffs[n]
    }

    /// Exponential coefficient n! · [t^n]. Panics when n exceeds the order.
    pub fn egf_coeff(&self, n: usize) -> LambdaPoly {
        self.coeffs[n].scale(&factorial_rational(n))
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LambdaPoly::is_zero)
    }

    /// Restrict to a lower truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        TruncSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale_poly(&self, c: &LambdaPoly) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Coefficient-wise evaluation at a rational λ.
    pub fn eval_lambda(&self, q: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(q)).collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Drop a factor t^v; the order shrinks by v. Requires valuation >= v.
    fn shift_down(&self, v: usize) -> Self {
        debug_assert!(self.coeffs[..v].iter().all(LambdaPoly::is_zero));
        TruncSeries {
            order: self.order - v,
            coeffs: self.coeffs[v..].to_vec(),
        }
    }

    /// Smallest λ-valuation over nonzero coefficients, `None` for zero.
    fn lambda_content(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .filter_map(LambdaPoly::lambda_valuation)
            .min()
    }

    fn div_lambda_pow(&self, w: usize) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.div_lambda_pow(w))
            .collect::<Option<Vec<_>>>()?;
        Some(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplicative inverse; requires the constant term to be a nonzero
    /// rational.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.is_constant() || c0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let inv = rat(1) / c0.coeff(0);
        let mut q = vec![LambdaPoly::zero(); self.order + 1];
        q[0] = LambdaPoly::constant(inv.clone());
        for n in 1..=self.order {
            let mut s = LambdaPoly::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() && !q[n - j].is_zero() {
                    s += &(&self.coeffs[j] * &q[n - j]);
                }
            }
            q[n] = (-&s).scale(&inv);
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: q,
        })
    }

    /// Exact quotient self / den to order `min(orders) - val(den)`.
    ///
    /// Multiplying the quotient back by `den` reproduces `self` to that
    /// order.
    pub fn div(&self, den: &TruncSeries) -> Result<Self> {
        let order = self.order.min(den.order);
        let num = self.truncate(order);
        let den = den.truncate(order);
        let vd = den.valuation().ok_or(Error::DivisionByNonUnit)?;
        match num.valuation() {
            // 0 / den = 0 at the order the quotient would have had.
            None => return Ok(TruncSeries::zero(order - vd)),
            Some(vn) if vn < vd => return Err(Error::Valuation),
            Some(_) => {}
        }
        let mut num = num.shift_down(vd);
        let mut den = den.shift_down(vd);

        if !den.coeffs[0].is_constant() {
            // Constant term divisible by λ: cancel the denominator's full
            // λ-content, which the numerator must share for the quotient to
            // stay polynomial in λ.
            let w = den.lambda_content().unwrap_or(0);
            if w == 0 {
                return Err(Error::DivisionByNonUnit);
            }
            den = den.div_lambda_pow(w).ok_or(Error::DivisionByNonUnit)?;
            num = num.div_lambda_pow(w).ok_or(Error::DivisionByNonUnit)?;
            if !den.coeffs[0].is_constant() {
                return Err(Error::DivisionByNonUnit);
            }
        }
        Ok(&num * &den.invert()?)
    }

    /// Composition self ∘ g; requires g(0) = 0. Horner over the coefficient
    /// list of self, truncated at the minimum order.
    pub fn compose(&self, g: &TruncSeries) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Composition);
        }
        let order = self.order.min(g.order);
        let g = g.truncate(order);
        let mut acc = TruncSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &acc * &g;
            if !c.is_zero() {
                acc.coeffs[0] = &acc.coeffs[0] + c;
            }
        }
        Ok(acc)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![LambdaPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TruncSeries { order, coeffs }
    }
}

/// The Mercator-type series Σ_{n>=1} (-1)^{n-1} λ^n t^n / n, i.e. the
/// expansion of log(1 + λt), truncated at `order`.
pub fn log1p_lambda_series(order: usize) -> TruncSeries {
    TruncSeries::from_fn(order, |n| {
        if n == 0 {
            LambdaPoly::zero()
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            LambdaPoly::constant(ratio(sign, n as i64)).mul_lambda_pow(n)
        }
    })
}
