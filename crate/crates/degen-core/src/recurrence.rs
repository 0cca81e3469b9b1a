//! The doubly indexed degenerate sequences: one recurrence parameterized by
//! r (r = 0 and r = 1 recover the two standalone variants), trapezoid
//! propagation, and the closed-form alternating sum through degenerate
//! r-Stirling numbers.
//!
//! The recurrence a(n, m) = (m+r) a(n-1, m) - (m+1) a(n-1, m+1)
//! - (n-1)λ a(n-1, m) makes a(n, m) depend on row n-1 at columns m and m+1,
//! so reaching a(N, 0) needs exactly the trapezoid with row n spanning
//! columns 0..=N-n.

use crate::binomial::factorial_rational;
use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{rat, ratio, Rational};
use crate::report::{case_from_pairs, param_map, VerificationReport};
use crate::series::TruncSeries;
use crate::stirling::r_stirling2_convolution;
use num_traits::pow;
use std::collections::BTreeMap;

/// Initial row a(0, m) of a doubly indexed sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitialSequence {
    /// m ↦ 1/(m+1).
    Harmonic,
    /// m ↦ q^m.
    Geometric(Rational),
    /// Finite list of values; indexing beyond it is an error.
    Explicit(Vec<LambdaPoly>),
}

impl InitialSequence {
    /// Value a(0, m).
    pub fn at(&self, m: usize) -> Result<LambdaPoly> {
        match self {
            InitialSequence::Harmonic => {
                Ok(LambdaPoly::constant(ratio(1, m as i64 + 1)))
            }
            InitialSequence::Geometric(q) => Ok(LambdaPoly::constant(pow(q.clone(), m))),
            InitialSequence::Explicit(values) => {
                values
                    .get(m)
                    .cloned()
                    .ok_or(Error::InitialTooShort {
                        len: values.len(),
                        index: m,
                    })
            }
        }
    }

    /// Ordinary generating function Σ a(0, m) t^m truncated at `order`.
    pub fn ogf(&self, order: usize) -> Result<TruncSeries> {
        let coeffs = (0..=order).map(|m| self.at(m)).collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries::from_coeffs(order, coeffs))
    }

    pub fn label(&self) -> String {
        match self {
            InitialSequence::Harmonic => "harmonic".to_string(),
            InitialSequence::Geometric(q) => format!("geometric({q})"),
            InitialSequence::Explicit(values) => format!("explicit[len={}]", values.len()),
        }
    }
}

/// Finite trapezoidal slice of a doubly indexed sequence: row n holds
/// a(n, 0..=N-n), exactly the entries needed to reach a(N, 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trapezoid {
    r: usize,
    target: usize,
    rows: Vec<Vec<LambdaPoly>>,
}

impl Trapezoid {
    pub fn r(&self) -> usize {
        self.r
    }

    /// The target row N.
    pub fn target(&self) -> usize {
        self.target
    }

    pub fn rows(&self) -> &[Vec<LambdaPoly>] {
        &self.rows
    }

    /// Entry a(n, m); defined for n <= N and m <= N - n.
    pub fn entry(&self, n: usize, m: usize) -> &LambdaPoly {
        &self.rows[n][m]
    }
}

/// Propagate the recurrence from an initial sequence down to row N.
pub fn build_trapezoid(init: &InitialSequence, r: i64, n_target: usize) -> Result<Trapezoid> {
    if r < 0 {
        return Err(Error::NegativeR(r));
    }
    let ru = r as usize;
    let row0 = (0..=n_target)
        .map(|m| init.at(m))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = vec![row0];
    for n in 1..=n_target {
        let prev = &rows[n - 1];
        let width = n_target - n;
        let lambda_n = LambdaPoly::lambda().scale(&rat(n as i64 - 1));
        let mut row = Vec::with_capacity(width + 1);
        for m in 0..=width {
            let mut v = prev[m].scale(&rat((m + ru) as i64));
            v -= &prev[m + 1].scale(&rat(m as i64 + 1));
            v -= &(&prev[m] * &lambda_n);
            row.push(v);
        }
        rows.push(row);
    }
    Ok(Trapezoid {
        r: ru,
        target: n_target,
        rows,
    })
}

/// Closed form a(n, 0) = Σ_m {n+r brace m+r}_λ (-1)^m m! a(0, m).
pub fn closed_form_a_n0(init: &InitialSequence, r: i64, n: usize) -> Result<LambdaPoly> {
    if r < 0 {
        return Err(Error::NegativeR(r));
    }
    let mut sum = LambdaPoly::zero();
    for m in 0..=n {
        let entry = r_stirling2_convolution(n, m, r)?;
        if entry.is_zero() {
            continue;
        }
        let init_val = init.at(m)?;
        if init_val.is_zero() {
            continue;
        }
        let mut factor = factorial_rational(m);
        if m % 2 == 1 {
            factor = -factor;
        }
        sum += &(&entry.scale(&factor) * &init_val);
    }
    Ok(sum)
}

/// Check recurrence propagation against the closed form for every n <= N.
pub fn verify_recurrence_vs_closed(
    init: &InitialSequence,
    r: i64,
    n_max: usize,
) -> Result<VerificationReport> {
    let trapezoid = build_trapezoid(init, r, n_max)?;
    let bounds = BTreeMap::from([("n_max".to_string(), n_max as i64), ("r".to_string(), r)]);
    let mut report = VerificationReport::new("recurrence_vs_closed", 0, bounds);
    for n in 0..=n_max {
        let closed = closed_form_a_n0(init, r, n)?;
        let params = param_map(&[
            ("init", serde_json::json!(init.label())),
            ("n", serde_json::json!(n)),
            ("r", serde_json::json!(r)),
        ]);
        report.push(case_from_pairs(params, &[(trapezoid.entry(n, 0), &closed)]));
    }
    Ok(report)
}
