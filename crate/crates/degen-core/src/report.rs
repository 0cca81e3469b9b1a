//! Verification reports and the exact wire format for λ-polynomials.
//!
//! Every mathematical value serializes as an exact decimal string ("p/q" or
//! "p"), never as a native JSON number, so arbitrary precision survives any
//! JSON parser. Reports serialize deterministically: case ordering is
//! canonical and map keys are sorted.

use crate::error::Result;
use crate::lambda_poly::LambdaPoly;
use crate::rational::{parse_rational, Rational};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

/// Exact wire form of a [`LambdaPoly`]: rational strings, lowest degree
/// first. Round-trips bit-exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaPolyWire {
    pub coeffs: Vec<String>,
}

impl LambdaPolyWire {
    pub fn from_poly(p: &LambdaPoly) -> Self {
        let coeffs = if p.is_zero() {
            vec!["0".to_string()]
        } else {
            p.coeffs().iter().map(Rational::to_string).collect()
        };
        LambdaPolyWire { coeffs }
    }

    pub fn to_poly(&self) -> Result<LambdaPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(LambdaPoly::from_coeffs(coeffs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// First point of disagreement between two polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index of the first differing λ-coefficient.
    pub index: usize,
    pub left: LambdaPolyWire,
    pub right: LambdaPolyWire,
}

/// One verified case: its parameters, the verdict, and a witness on failure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Case {
    pub params: BTreeMap<String, serde_json::Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// Outcome of one verification suite run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub bounds: BTreeMap<String, i64>,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, bounds: BTreeMap<String, i64>) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            seed,
            bounds,
            cases: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, case: Case) {
        match case.verdict {
            Verdict::Pass => self.summary.pass += 1,
            Verdict::Fail => self.summary.fail += 1,
        }
        self.cases.push(case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = Case>) {
        for case in cases {
            self.push(case);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// Human-readable rendering: one line per case plus a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {})", self.suite, self.seed);
        let bounds = self
            .bounds
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "bounds: {bounds}");
        for case in &self.cases {
            let params = case
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", compact_value(v)))
                .collect::<Vec<_>>()
                .join(" ");
            match case.verdict {
                Verdict::Pass => {
                    let _ = writeln!(out, "PASS {params}");
                }
                Verdict::Fail => {
                    let w = case.witness.as_ref();
                    let detail = w
                        .map(|w| {
                            format!(
                                " (coefficient {}: {:?} vs {:?})",
                                w.index, w.left.coeffs, w.right.coeffs
                            )
                        })
                        .unwrap_or_default();
                    let _ = writeln!(out, "FAIL {params}{detail}");
                }
            }
        }
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed",
            self.summary.pass, self.summary.fail
        );
        out
    }
}

fn compact_value(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Merge sub-suite reports into a combined report; each case gains a
/// "suite" parameter and bounds are namespaced by suite.
pub fn merge_reports(suite: &str, seed: u64, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut bounds = BTreeMap::new();
    let mut merged = VerificationReport::new(suite, seed, BTreeMap::new());
    for part in parts {
        for (k, v) in &part.bounds {
            bounds.insert(format!("{}.{}", part.suite, k), *v);
        }
        for mut case in part.cases {
            case.params.insert(
                "suite".to_string(),
                serde_json::Value::String(part.suite.clone()),
            );
            merged.push(case);
        }
    }
    merged.bounds = bounds;
    merged
}

/// `None` when the polynomials agree; otherwise the first differing
/// coefficient and both values.
pub fn compare_polys(left: &LambdaPoly, right: &LambdaPoly) -> Option<Witness> {
    if left == right {
        return None;
    }
    let len = left.coeffs().len().max(right.coeffs().len());
    let index = (0..len)
        .find(|&i| left.coeff(i) != right.coeff(i))
        .unwrap_or(len);
    Some(Witness {
        index,
        left: LambdaPolyWire::from_poly(left),
        right: LambdaPolyWire::from_poly(right),
    })
}

/// Build a case from pairwise equality checks; the witness comes from the
/// first failing pair.
pub fn case_from_pairs(
    params: BTreeMap<String, serde_json::Value>,
    pairs: &[(&LambdaPoly, &LambdaPoly)],
) -> Case {
    for (l, r) in pairs {
        if let Some(witness) = compare_polys(l, r) {
            return Case {
                params,
                verdict: Verdict::Fail,
                witness: Some(witness),
            };
        }
    }
    Case {
        params,
        verdict: Verdict::Pass,
        witness: None,
    }
}

/// Convenience constructor for sorted parameter maps.
pub fn param_map(entries: &[(&str, serde_json::Value)]) -> BTreeMap<String, serde_json::Value> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}
