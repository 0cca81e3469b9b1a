//! Named verification suites: each one recomputes a family of identities
//! through at least two independent routes and reports per-case verdicts.
//!
//! Suites are deterministic given (bounds, seed): randomized inputs come from
//! a seeded ChaCha stream generated up front, case order is canonical, and
//! parallel execution (rayon) preserves that order.

use crate::genfun::classical;
use crate::genfun::{beta_closed_form, beta_series, euler_series, theorem5_lhs};
use crate::lambda_poly::LambdaPoly;
use crate::operator::{apply_theta_closed, apply_theta_iterated};
use crate::rational::{rat, ratio, Rational};
use crate::recurrence::{build_trapezoid, closed_form_a_n0, InitialSequence};
use crate::report::{
    case_from_pairs, merge_reports, param_map, Case, VerificationReport,
};
use crate::stirling::{
    count_partitions_bruteforce, count_r_partitions_bruteforce, r_stirling2_convolution,
    r_stirling2_via_basis, r_stirling2_via_egf, stirling1_classical, stirling1_degenerate,
    stirling2_degenerate,
};
use crate::tpoly::TPoly;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;

/// All suite names accepted by [`run_suite`].
pub const SUITE_NAMES: &[&str] = &[
    "lemma1",
    "inversion",
    "rstirling3way",
    "theorem2",
    "theorem3",
    "theorem4",
    "theorem5",
    "eq11",
    "limits",
    "all",
];

/// Bounds for a suite run. `None` fields fall back to per-suite defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub n_max: Option<usize>,
    pub k_max: Option<usize>,
    pub r_max: Option<i64>,
    pub order: Option<usize>,
    pub deg_max: Option<usize>,
    pub poly_count: Option<usize>,
    pub seed: u64,
}

impl SuiteParams {
    pub fn seeded(seed: u64) -> Self {
        SuiteParams {
            seed,
            ..SuiteParams::default()
        }
    }

    fn r_max_or(&self, default: i64) -> Result<i64> {
        let r = self.r_max.unwrap_or(default);
        if r < 0 {
            Err(Error::NegativeR(r))
        } else {
            Ok(r)
        }
    }
}

/// Run a suite by name.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationReport> {
    match name {
        "lemma1" => lemma1(params),
        "inversion" => inversion(params),
        "rstirling3way" => rstirling3way(params),
        "theorem2" => theorem2(params),
        "theorem3" => theorem3(params),
        "theorem4" => theorem4(params),
        "theorem5" => theorem5(params),
        "eq11" => eq11(params),
        "limits" => limits(params),
        "all" => run_all(params),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Every suite except `all`, merged into one report.
pub fn run_all(params: &SuiteParams) -> Result<VerificationReport> {
    let parts = SUITE_NAMES[..SUITE_NAMES.len() - 1]
        .iter()
        .map(|name| run_suite(name, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_reports("all", params.seed, parts))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_tpoly(rng: &mut ChaCha8Rng, deg_max: usize) -> TPoly {
    let deg = rng.gen_range(0..=deg_max);
    TPoly::from_coeffs(
        (0..=deg)
            .map(|_| LambdaPoly::constant(small_rational(rng)))
            .collect(),
    )
}

/// Seeded initial sequences used by the theorem-4/5 grids: the three built-in
/// sequences plus five random rational ones.
pub fn standard_initial_sequences(seed: u64, len: usize) -> Vec<(String, InitialSequence)> {
    let mut inits = vec![
        ("harmonic".to_string(), InitialSequence::Harmonic),
        (
            "geometric(1/2)".to_string(),
            InitialSequence::Geometric(ratio(1, 2)),
        ),
        (
            "geometric(1/3)".to_string(),
            InitialSequence::Geometric(ratio(1, 3)),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..5 {
        let values = (0..len)
            .map(|_| LambdaPoly::constant(small_rational(&mut rng)))
            .collect();
        inits.push((format!("random-{i}"), InitialSequence::Explicit(values)));
    }
    inits
}

/// The `lemma1` suite: the iterated operator equals its Stirling closed
/// form on seeded random polynomials.
pub fn lemma1(params: &SuiteParams) -> Result<VerificationReport> {
    let k_max = params.k_max.unwrap_or(8);
    let deg_max = params.deg_max.unwrap_or(10);
    let poly_count = params.poly_count.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let polys: Vec<TPoly> = (0..poly_count)
        .map(|_| random_tpoly(&mut rng, deg_max))
        .collect();

    let bounds = BTreeMap::from([
        ("deg_max".to_string(), deg_max as i64),
        ("k_max".to_string(), k_max as i64),
        ("poly_count".to_string(), poly_count as i64),
    ]);
    let mut report = VerificationReport::new("lemma1", params.seed, bounds);
    let cases: Vec<Case> = polys
        .par_iter()
        .enumerate()
        .flat_map(|(i, f)| {
            (0..=k_max)
                .map(|k| {
                    let iterated = apply_theta_iterated(f, k);
                    let closed = apply_theta_closed(f, k);
                    let params = param_map(&[("k", json!(k)), ("poly", json!(i))]);
                    tpoly_case(params, &iterated, &closed)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    report.extend(cases);
    Ok(report)
}

/// Compare polynomials in t coefficient-by-coefficient; the witness is the
/// first differing λ-polynomial coefficient.
fn tpoly_case(
    params: BTreeMap<String, serde_json::Value>,
    left: &TPoly,
    right: &TPoly,
) -> Case {
    let len = left.coeffs().len().max(right.coeffs().len());
    let pairs: Vec<(LambdaPoly, LambdaPoly)> = (0..len)
        .map(|i| (left.coeff(i), right.coeff(i)))
        .collect();
    let refs: Vec<(&LambdaPoly, &LambdaPoly)> = pairs.iter().map(|(l, r)| (l, r)).collect();
    case_from_pairs(params, &refs)
}

/// Stirling inversion: Σ_j S_{1,λ}(n, j) S_{2,λ}(j, m) = δ_{nm}.
pub fn inversion(params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(12);
    let bounds = BTreeMap::from([("n_max".to_string(), n_max as i64)]);
    let mut report = VerificationReport::new("inversion", params.seed, bounds);
    let grid: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=n_max).map(move |m| (n, m)))
        .collect();
    let cases: Vec<Case> = grid
        .par_iter()
        .map(|&(n, m)| {
            let mut sum = LambdaPoly::zero();
            for j in m..=n {
                let s1 = stirling1_degenerate(n, j).expect("valid index");
                let s2 = stirling2_degenerate(j, m).expect("valid index");
                sum += &(&s1 * &s2);
            }
            let expect = if n == m {
                LambdaPoly::one()
            } else {
                LambdaPoly::zero()
            };
            case_from_pairs(
                param_map(&[("m", json!(m)), ("n", json!(n))]),
                &[(&sum, &expect)],
            )
        })
        .collect();
    report.extend(cases);
    Ok(report)
}

/// Three-way agreement of the degenerate r-Stirling routes.
pub fn rstirling3way(params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(12);
    let r_max = params.r_max_or(4)?;
    let order = params.order.unwrap_or(12).max(n_max);
    let bounds = BTreeMap::from([
        ("n_max".to_string(), n_max as i64),
        ("order".to_string(), order as i64),
        ("r_max".to_string(), r_max),
    ]);
    let mut report = VerificationReport::new("rstirling3way", params.seed, bounds);
    let grid: Vec<(i64, usize, usize)> = (0..=r_max)
        .flat_map(|r| (0..=n_max).flat_map(move |n| (0..=n).map(move |k| (r, n, k))))
        .collect();
    let cases: Vec<Case> = grid
        .par_iter()
        .map(|&(r, n, k)| {
            let conv = r_stirling2_convolution(n, k, r).expect("valid grid");
            let egf = r_stirling2_via_egf(n, k, r, order).expect("valid grid");
            let basis = r_stirling2_via_basis(n, k, r).expect("valid grid");
            case_from_pairs(
                param_map(&[("k", json!(k)), ("n", json!(n)), ("r", json!(r))]),
                &[(&conv, &egf), (&conv, &basis)],
            )
        })
        .collect();
    report.extend(cases);
    Ok(report)
}

/// The `theorem2` suite: harmonic initial sequence, r = 0. Recurrence
/// propagation, closed form, and the fully degenerate Bernoulli series all
/// agree.
pub fn theorem2(params: &SuiteParams) -> Result<VerificationReport> {
    harmonic_beta_suite("theorem2", params, 0)
}

/// The `theorem3` suite: harmonic initial sequence, r = 1; the values are
/// β_{n,λ}(1).
pub fn theorem3(params: &SuiteParams) -> Result<VerificationReport> {
    harmonic_beta_suite("theorem3", params, 1)
}

fn harmonic_beta_suite(name: &str, params: &SuiteParams, r: i64) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(12);
    let init = InitialSequence::Harmonic;
    let trapezoid = build_trapezoid(&init, r, n_max)?;
    let beta = beta_series(&rat(r), n_max)?;
    let bounds = BTreeMap::from([("n_max".to_string(), n_max as i64), ("r".to_string(), r)]);
    let mut report = VerificationReport::new(name, params.seed, bounds);
    for n in 0..=n_max {
        let recurrence = trapezoid.entry(n, 0);
        let closed = closed_form_a_n0(&init, r, n)?;
        let series = beta.egf_coeff(n);
        report.push(case_from_pairs(
            param_map(&[("n", json!(n))]),
            &[(recurrence, &closed), (recurrence, &series)],
        ));
    }
    Ok(report)
}

/// The `theorem4` suite: recurrence route equals closed-form route over the
/// full grid of initial sequences and r.
pub fn theorem4(params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(12);
    let r_max = params.r_max_or(4)?;
    let inits = standard_initial_sequences(params.seed, n_max + 1);
    let bounds = BTreeMap::from([
        ("n_max".to_string(), n_max as i64),
        ("r_max".to_string(), r_max),
    ]);
    let mut report = VerificationReport::new("theorem4", params.seed, bounds);
    let groups: Vec<(String, InitialSequence, i64)> = inits
        .iter()
        .flat_map(|(label, init)| {
            (0..=r_max).map(move |r| (label.clone(), init.clone(), r))
        })
        .collect();
    let cases: Vec<Vec<Case>> = groups
        .par_iter()
        .map(|(label, init, r)| {
            let trapezoid = build_trapezoid(init, *r, n_max).expect("valid grid");
            (0..=n_max)
                .map(|n| {
                    let closed = closed_form_a_n0(init, *r, n).expect("valid grid");
                    case_from_pairs(
                        param_map(&[
                            ("init", json!(label)),
                            ("n", json!(n)),
                            ("r", json!(r)),
                        ]),
                        &[(trapezoid.entry(n, 0), &closed)],
                    )
                })
                .collect()
        })
        .collect();
    report.extend(cases.into_iter().flatten());
    Ok(report)
}

/// The `theorem5` suite: EGF coefficients of e_λ^r(t) F(1 - e_λ(t)) equal
/// the closed form and the trapezoid; for the geometric(1/2) sequence they
/// also equal the degenerate Euler polynomials at r.
pub fn theorem5(params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(12);
    let r_max = params.r_max_or(4)?;
    let inits = standard_initial_sequences(params.seed, n_max + 1);
    let bounds = BTreeMap::from([
        ("n_max".to_string(), n_max as i64),
        ("r_max".to_string(), r_max),
    ]);
    let mut report = VerificationReport::new("theorem5", params.seed, bounds);
    let half = ratio(1, 2);
    let groups: Vec<(String, InitialSequence, i64)> = inits
        .iter()
        .flat_map(|(label, init)| {
            (0..=r_max).map(move |r| (label.clone(), init.clone(), r))
        })
        .collect();
    let cases: Vec<Vec<Case>> = groups
        .par_iter()
        .map(|(label, init, r)| {
            let lhs = theorem5_lhs(init, *r, n_max).expect("valid grid");
            let trapezoid = build_trapezoid(init, *r, n_max).expect("valid grid");
            let euler = matches!(init, InitialSequence::Geometric(q) if *q == half)
                .then(|| euler_series(&rat(*r), n_max).expect("valid grid"));
            (0..=n_max)
                .map(|n| {
                    let egf = lhs.egf_coeff(n);
                    let closed = closed_form_a_n0(init, *r, n).expect("valid grid");
                    let mut pairs = vec![(&egf, &closed), (&egf, trapezoid.entry(n, 0))];
                    let euler_n = euler.as_ref().map(|s| s.egf_coeff(n));
                    if let Some(e) = euler_n.as_ref() {
                        pairs.push((&egf, e));
                    }
                    case_from_pairs(
                        param_map(&[
                            ("init", json!(label)),
                            ("n", json!(n)),
                            ("r", json!(r)),
                        ]),
                        &pairs,
                    )
                })
                .collect()
        })
        .collect();
    report.extend(cases.into_iter().flatten());
    Ok(report)
}

/// β_{n,λ}(r) closed form against the generating-function route.
pub fn eq11(params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(14);
    let r_max = params.r_max_or(4)?;
    let order = params.order.unwrap_or(12).max(n_max);
    let bounds = BTreeMap::from([
        ("n_max".to_string(), n_max as i64),
        ("order".to_string(), order as i64),
        ("r_max".to_string(), r_max),
    ]);
    let mut report = VerificationReport::new("eq11", params.seed, bounds);
    let cases: Vec<Case> = (0..=r_max)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&r| {
            let series = beta_series(&rat(r), order).expect("valid grid");
            (0..=n_max)
                .map(|n| {
                    let closed = beta_closed_form(n, r).expect("valid grid");
                    let from_series = series.egf_coeff(n);
                    case_from_pairs(
                        param_map(&[("n", json!(n)), ("r", json!(r))]),
                        &[(&closed, &from_series)],
                    )
                })
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    report.extend(cases);
    Ok(report)
}

/// Classical limits at λ = 0: brute-force partition counts for the Stirling
/// triangles and classical EGF expansions for the Bernoulli/Euler families.
pub fn limits(params: &SuiteParams) -> Result<VerificationReport> {
    let n_max = params.n_max.unwrap_or(16);
    let r_max = params.r_max_or(4)?;
    let brute_max = n_max.min(10);
    let zero = rat(0);
    let bounds = BTreeMap::from([
        ("brute_max".to_string(), brute_max as i64),
        ("n_max".to_string(), n_max as i64),
        ("r_max".to_string(), r_max),
    ]);
    let mut report = VerificationReport::new("limits", params.seed, bounds);

    // S_{2,λ}(n,k) at λ = 0 counts set partitions
    for n in 0..=brute_max {
        for k in 0..=n {
            let at_zero = LambdaPoly::constant(stirling2_degenerate(n, k)?.eval(&zero));
            let count = LambdaPoly::constant(rat(count_partitions_bruteforce(n, k)? as i64));
            report.push(case_from_pairs(
                param_map(&[("check", json!("stirling2")), ("k", json!(k)), ("n", json!(n))]),
                &[(&at_zero, &count)],
            ));
        }
    }
    // degenerate r-Stirling at λ = 0 counts r-partitions
    for r in 0..=r_max {
        for n in 0..=brute_max.saturating_sub(r as usize) {
            for k in 0..=n {
                let at_zero =
                    LambdaPoly::constant(r_stirling2_convolution(n, k, r)?.eval(&zero));
                let count =
                    LambdaPoly::constant(rat(count_r_partitions_bruteforce(n, k, r)? as i64));
                report.push(case_from_pairs(
                    param_map(&[
                        ("check", json!("rstirling2")),
                        ("k", json!(k)),
                        ("n", json!(n)),
                        ("r", json!(r)),
                    ]),
                    &[(&at_zero, &count)],
                ));
            }
        }
    }
    // S_{1,λ}(n,k) at λ = 0 is the classical signed first-kind number
    for n in 0..=n_max.min(12) {
        for k in 0..=n {
            let at_zero = LambdaPoly::constant(stirling1_degenerate(n, k)?.eval(&zero));
            let classical = LambdaPoly::constant(stirling1_classical(n, k)?);
            report.push(case_from_pairs(
                param_map(&[("check", json!("stirling1")), ("k", json!(k)), ("n", json!(n))]),
                &[(&at_zero, &classical)],
            ));
        }
    }
    // β_{n,0} equals the classical Bernoulli number
    let bernoulli = classical::bernoulli_numbers(n_max);
    let beta = beta_series(&zero, n_max)?;
    for n in 0..=n_max {
        let at_zero = LambdaPoly::constant(beta.egf_coeff(n).eval(&zero));
        let classical_value = LambdaPoly::constant(bernoulli[n].clone());
        report.push(case_from_pairs(
            param_map(&[("check", json!("bernoulli")), ("n", json!(n))]),
            &[(&at_zero, &classical_value)],
        ));
    }
    // ℰ_{n,0}(0) equals the classical Euler polynomial value at 0
    let euler0 = classical::euler_polynomials_at_zero(n_max);
    let euler = euler_series(&zero, n_max)?;
    for n in 0..=n_max {
        let at_zero = LambdaPoly::constant(euler.egf_coeff(n).eval(&zero));
        let classical_value = LambdaPoly::constant(euler0[n].clone());
        report.push(case_from_pairs(
            param_map(&[("check", json!("euler")), ("n", json!(n))]),
            &[(&at_zero, &classical_value)],
        ));
    }
    Ok(report)
}
