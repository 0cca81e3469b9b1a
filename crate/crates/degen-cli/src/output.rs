//! Output rendering shared by the subcommands.
//!
//! Symbolic λ renders values as exact coefficient-list objects; a rational λ
//! renders exact "p/q" strings. Native JSON numbers never carry mathematical
//! values.

use degen_core::report::{LambdaPolyWire, SCHEMA_VERSION};
use degen_core::{parse_rational, LambdaPoly, Rational};
use serde::Serialize;
use serde_json::Value;

/// How to present λ: keep it symbolic or evaluate at a rational point.
#[derive(Clone, Debug)]
pub enum LambdaMode {
    Sym,
    At(Rational),
}

impl LambdaMode {
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "sym" {
            return Ok(LambdaMode::Sym);
        }
        parse_rational(s)
            .map(LambdaMode::At)
            .map_err(|_| format!("--lambda must be \"sym\" or an exact rational, got `{s}`"))
    }

    pub fn label(&self) -> String {
        match self {
            LambdaMode::Sym => "sym".to_string(),
            LambdaMode::At(q) => q.to_string(),
        }
    }

    /// Wire object under symbolic λ, exact rational string otherwise.
    pub fn render(&self, p: &LambdaPoly) -> Value {
        match self {
            LambdaMode::Sym => {
                serde_json::to_value(LambdaPolyWire::from_poly(p)).expect("wire serializes")
            }
            LambdaMode::At(q) => Value::String(p.eval(q).to_string()),
        }
    }

    /// Exact rational string; only valid when λ is rational.
    pub fn render_csv(&self, p: &LambdaPoly) -> String {
        match self {
            LambdaMode::Sym => unreachable!("csv requires a rational lambda"),
            LambdaMode::At(q) => p.eval(q).to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct TriangleDoc {
    pub schema: u32,
    pub table: String,
    pub lambda: String,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Serialize)]
pub struct SequenceDoc {
    pub schema: u32,
    pub table: String,
    pub lambda: String,
    pub x: String,
    pub n_max: usize,
    pub values: Vec<Value>,
}

#[derive(Serialize)]
pub struct TrapezoidDoc {
    pub schema: u32,
    pub table: String,
    pub lambda: String,
    pub init: String,
    pub r: i64,
    pub n_max: usize,
    pub rows: Vec<Vec<Value>>,
}

pub fn schema() -> u32 {
    SCHEMA_VERSION
}

pub fn print_json<T: Serialize>(doc: &T) {
    println!("{}", serde_json::to_string(doc).expect("document serializes"));
}

/// One-line usage error on stderr; callers exit with code 2.
pub fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}
