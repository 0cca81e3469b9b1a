//! Degenerate exponentials and the generating-function families: Carlitz
//! degenerate Bernoulli, degenerate Euler, and fully degenerate Bernoulli
//! polynomials, plus the EGF composition identity relating them to the
//! recurrence module.
//!
//! e_λ^x(t) is expanded as Σ (x)_{n,λ} t^n/n! rather than through the
//! fractional-power closed form, which keeps λ formal; the two agree as
//! formal series. x-arguments are rational evaluation points, not a second
//! indeterminate.

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::{rat, Rational};
use crate::recurrence::{closed_form_a_n0, InitialSequence};
use crate::report::{case_from_pairs, param_map, VerificationReport};
use crate::series::{log1p_lambda_series, TruncSeries};
use crate::stirling::r_stirling2_convolution;
use std::collections::BTreeMap;

/// The three generating-function families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    /// t/(e_λ(t) - 1) · e_λ^x(t)
    CarlitzBernoulli,
    /// 2/(e_λ(t) + 1) · e_λ^x(t)
    DegenerateEuler,
    /// log(1+λt)/(λ(e_λ(t) - 1)) · e_λ^x(t)
    FullyDegenerateBernoulli,
}

/// A prefix of one family: values[n] = n! · [t^n] of its generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPolyValues {
    pub family: PolyFamily,
    pub x: Rational,
    pub values: Vec<LambdaPoly>,
}

/// The degenerate exponential e_λ^x(t) = Σ (x)_{n,λ} t^n/n!, truncated.
pub fn degenerate_exp(x: &Rational, order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut current = LambdaPoly::one();
    coeffs.push(current.clone());
    for n in 1..=order {
        // multiply by (x - (n-1)λ) / n
        let factor = LambdaPoly::from_coeffs(vec![x.clone(), rat(-(n as i64 - 1))]);
        current = (&current * &factor).scale(&(rat(1) / rat(n as i64)));
        coeffs.push(current.clone());
    }
    TruncSeries::from_coeffs(order, coeffs)
}

fn exp_minus_one(order: usize) -> TruncSeries {
    &degenerate_exp(&rat(1), order) - &TruncSeries::one(order)
}

/// Generating function of the Carlitz degenerate Bernoulli polynomials,
/// t/(e_λ(t) - 1) · e_λ^x(t), to `order`.
pub fn carlitz_series(x: &Rational, order: usize) -> Result<TruncSeries> {
    let num = TruncSeries::monomial(LambdaPoly::one(), 1, order + 1);
    let ratio = num.div(&exp_minus_one(order + 1))?;
    Ok(&ratio * &degenerate_exp(x, order))
}

/// Generating function of the degenerate Euler polynomials,
/// 2/(e_λ(t) + 1) · e_λ^x(t), to `order`.
pub fn euler_series(x: &Rational, order: usize) -> Result<TruncSeries> {
    let num = TruncSeries::constant(LambdaPoly::constant(rat(2)), order);
    let den = &degenerate_exp(&rat(1), order) + &TruncSeries::one(order);
    Ok(&num.div(&den)? * &degenerate_exp(x, order))
}

/// Generating function of the fully degenerate Bernoulli polynomials,
/// log(1+λt)/(λ(e_λ(t) - 1)) · e_λ^x(t), to `order`.
///
/// Numerator and denominator share one factor of t and one factor of λ;
/// the division cancels both, leaving a unit constant term.
pub fn beta_series(x: &Rational, order: usize) -> Result<TruncSeries> {
    let num = log1p_lambda_series(order + 1);
    let den = exp_minus_one(order + 1).scale_poly(&LambdaPoly::lambda());
    Ok(&num.div(&den)? * &degenerate_exp(x, order))
}

fn check_order(order: usize, n: usize) -> Result<()> {
    if order < n {
        Err(Error::OrderTooLow { order, n })
    } else {
        Ok(())
    }
}

/// Carlitz degenerate Bernoulli polynomial B_n(x|λ).
pub fn carlitz_bernoulli(n: usize, x: &Rational, order: usize) -> Result<LambdaPoly> {
    check_order(order, n)?;
    Ok(carlitz_series(x, order)?.egf_coeff(n))
}

/// Degenerate Euler polynomial ℰ_{n,λ}(x).
pub fn degenerate_euler(n: usize, x: &Rational, order: usize) -> Result<LambdaPoly> {
    check_order(order, n)?;
    Ok(euler_series(x, order)?.egf_coeff(n))
}

/// Fully degenerate Bernoulli polynomial β_{n,λ}(x).
pub fn fully_degenerate_bernoulli(n: usize, x: &Rational, order: usize) -> Result<LambdaPoly> {
    check_order(order, n)?;
    Ok(beta_series(x, order)?.egf_coeff(n))
}

/// Closed form β_{n,λ}(r) = Σ_k {n+r brace k+r}_λ (-1)^k k!/(k+1).
pub fn beta_closed_form(n: usize, r: i64) -> Result<LambdaPoly> {
    if r < 0 {
        return Err(Error::NegativeR(r));
    }
    let mut sum = LambdaPoly::zero();
    let mut k_factorial = rat(1);
    for k in 0..=n {
        if k > 0 {
            k_factorial = &k_factorial * &rat(k as i64);
        }
        let entry = r_stirling2_convolution(n, k, r)?;
        if entry.is_zero() {
            continue;
        }
        let mut factor = &k_factorial / rat(k as i64 + 1);
        if k % 2 == 1 {
            factor = -factor;
        }
        sum += &entry.scale(&factor);
    }
    Ok(sum)
}

/// A prefix of a family's polynomial values at a fixed x.
pub fn family_values(
    family: PolyFamily,
    x: &Rational,
    n_max: usize,
    order: usize,
) -> Result<SpecialPolyValues> {
    let ord = order.max(n_max);
    let series = match family {
        PolyFamily::CarlitzBernoulli => carlitz_series(x, ord)?,
        PolyFamily::DegenerateEuler => euler_series(x, ord)?,
        PolyFamily::FullyDegenerateBernoulli => beta_series(x, ord)?,
    };
    Ok(SpecialPolyValues {
        family,
        x: x.clone(),
        values: (0..=n_max).map(|n| series.egf_coeff(n)).collect(),
    })
}

/// The composed-and-multiplied series e_λ^r(t) · F(1 - e_λ(t)), where F is
/// the ordinary generating function of the initial sequence. 1 - e_λ(t) has
/// zero constant term, so the composition is a legal formal substitution.
pub fn theorem5_lhs(init: &InitialSequence, r: i64, order: usize) -> Result<TruncSeries> {
    if r < 0 {
        return Err(Error::NegativeR(r));
    }
    let f = init.ogf(order)?;
    let g = &TruncSeries::one(order) - &degenerate_exp(&rat(1), order);
    let composed = f.compose(&g)?;
    Ok(&composed * &degenerate_exp(&rat(r), order))
}

/// Compare the EGF coefficients of [`theorem5_lhs`] with the closed-form
/// a(n, 0) for every n <= order.
pub fn verify_theorem5(
    init: &InitialSequence,
    r: i64,
    order: usize,
) -> Result<VerificationReport> {
    let lhs = theorem5_lhs(init, r, order)?;
    let bounds = BTreeMap::from([("order".to_string(), order as i64), ("r".to_string(), r)]);
    let mut report = VerificationReport::new("theorem5", 0, bounds);
    for n in 0..=order {
        let egf = lhs.egf_coeff(n);
        let closed = closed_form_a_n0(init, r, n)?;
        let params = param_map(&[
            ("init", serde_json::json!(init.label())),
            ("n", serde_json::json!(n)),
            ("r", serde_json::json!(r)),
        ]);
        report.push(case_from_pairs(params, &[(&egf, &closed)]));
    }
    Ok(report)
}

/// Classical (λ-free) oracles, expanded over plain rationals with their own
/// forward-substitution division, independent of the degenerate machinery.
pub mod classical {
    use crate::binomial::factorial_rational;
    use crate::rational::{rat, Rational};
    use num_traits::Zero;

    /// q = num/den over ordinary coefficients, den[0] != 0.
    fn ogf_div(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
        let inv = rat(1) / den[0].clone();
        let mut q = vec![rat(0); num.len()];
        for n in 0..num.len() {
            let mut s = num[n].clone();
            for j in 1..=n.min(den.len() - 1) {
                if !den[j].is_zero() {
                    s -= &den[j] * &q[n - j];
                }
            }
            q[n] = s * &inv;
        }
        q
    }

    /// B_0 .. B_{n_max} from the expansion of t/(e^t - 1).
    pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
        // (e^t - 1)/t has ordinary coefficients 1/(k+1)!
        let den: Vec<Rational> = (0..=n_max)
            .map(|k| rat(1) / factorial_rational(k + 1))
            .collect();
        let mut num = vec![rat(0); n_max + 1];
        num[0] = rat(1);
        ogf_div(&num, &den)
            .into_iter()
            .enumerate()
            .map(|(n, c)| c * factorial_rational(n))
            .collect()
    }

    /// E_0(0) .. E_{n_max}(0) from the expansion of 2/(e^t + 1).
    pub fn euler_polynomials_at_zero(n_max: usize) -> Vec<Rational> {
        let mut den: Vec<Rational> = (0..=n_max)
            .map(|k| rat(1) / factorial_rational(k))
            .collect();
        den[0] = rat(2);
        let mut num = vec![rat(0); n_max + 1];
        num[0] = rat(2);
        ogf_div(&num, &den)
            .into_iter()
            .enumerate()
            .map(|(n, c)| c * factorial_rational(n))
            .collect()
    }
}
