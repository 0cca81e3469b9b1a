//! Exact univariate polynomials in the deformation parameter λ.
//!
//! [`LambdaPoly`] is the value type of every degenerate quantity in this
//! crate: identities are proved coefficient-wise in λ, which is strictly
//! stronger than checking them at any fixed real λ. Evaluation at a rational
//! λ recovers specializations (λ = 0 gives the classical limits).

use crate::rational::{rat, Rational};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Dense polynomial in λ over [`Rational`], trailing zeros trimmed.
///
/// The zero polynomial is canonically the empty coefficient list, so equality
/// is structural comparison.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial λ.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![rat(0), rat(1)])
    }

    /// Build from coefficients (index i = coefficient of λ^i), trimming
    /// trailing zeros to the canonical representation.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = LambdaPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of λ^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    /// Degree, or `None` for the zero polynomial (the "minus infinity" case).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the polynomial has λ-degree <= 0.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Exact Horner evaluation at λ = q.
    pub fn eval(&self, q: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = &acc * q + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by λ^w.
    pub fn mul_lambda_pow(&self, w: usize) -> Self {
        if self.is_zero() || w == 0 {
            return self.clone();
        }
        let mut coeffs = vec![rat(0); w];
        coeffs.extend(self.coeffs.iter().cloned());
        LambdaPoly { coeffs }
    }

    /// Index of the lowest nonzero coefficient, `None` for zero.
    pub fn lambda_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact division by λ^w; `None` when some of the first w coefficients
    /// are nonzero.
    pub fn div_lambda_pow(&self, w: usize) -> Option<Self> {
        if w == 0 || self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.len() < w || self.coeffs[..w].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LambdaPoly {
            coeffs: self.coeffs[w..].to_vec(),
        })
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: LambdaPoly) -> LambdaPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $method(self, rhs: &LambdaPoly) -> LambdaPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &rat(0) {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != rat(1) {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "λ")?;
                    } else {
                        write!(f, "λ^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
