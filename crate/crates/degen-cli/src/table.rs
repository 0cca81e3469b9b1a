//! `degen table`: triangles, polynomial-family sequences, and recurrence
//! trapezoids.

use crate::output::{
    print_json, schema, usage_error, LambdaMode, SequenceDoc, TrapezoidDoc, TriangleDoc,
};
use clap::{Args, ValueEnum};
use degen_core::genfun::{family_values, PolyFamily};
use degen_core::recurrence::{build_trapezoid, InitialSequence};
use degen_core::stirling::{r_stirling2_convolution, shared, StirlingKind};
use degen_core::{parse_rational, LambdaPoly};
use std::time::Instant;

/// Hard cap on table sizes; exact symbolic rows grow fast beyond this.
const N_MAX_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Classical signed Stirling numbers of the first kind
    Stirling1,
    /// Classical Stirling numbers of the second kind
    Stirling2,
    /// Degenerate Stirling numbers of the first kind
    #[value(name = "stirling1deg")]
    Stirling1Deg,
    /// Degenerate Stirling numbers of the second kind
    #[value(name = "stirling2deg")]
    Stirling2Deg,
    /// Degenerate r-Stirling numbers of the second kind (set --r)
    #[value(name = "rstirling2")]
    RStirling2,
    /// Carlitz degenerate Bernoulli polynomials B_n(x|λ)
    Bernoulli,
    /// Degenerate Euler polynomials
    Euler,
    /// Fully degenerate Bernoulli polynomials
    Beta,
    /// Recurrence trapezoid rows (set --init and --r)
    Trapezoid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,

    /// Largest row index n (capped at 64)
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,

    /// Truncate triangle rows at this column
    #[arg(long)]
    pub k_max: Option<usize>,

    /// Shift parameter r for rstirling2 / trapezoid
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub r: i64,

    /// Evaluation point x for the polynomial families (exact rational)
    #[arg(long, default_value = "0")]
    pub x: String,

    /// "sym" for coefficient lists in λ, or an exact rational to evaluate at
    #[arg(long, default_value = "sym")]
    pub lambda: String,

    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,

    /// Truncation order for series-backed families
    #[arg(long, env = "DEGEN_ORDER", default_value_t = 12)]
    pub order: usize,

    /// Initial sequence for trapezoid: harmonic | geom:<p/q> | explicit:<c0,c1,..>
    #[arg(long, default_value = "harmonic")]
    pub init: String,

    /// Report construction wall time on stderr
    #[arg(long)]
    pub profile: bool,
}

fn parse_init(spec: &str) -> Result<InitialSequence, String> {
    if spec == "harmonic" {
        return Ok(InitialSequence::Harmonic);
    }
    if let Some(q) = spec.strip_prefix("geom:") {
        let q = parse_rational(q).map_err(|e| e.to_string())?;
        return Ok(InitialSequence::Geometric(q));
    }
    if let Some(list) = spec.strip_prefix("explicit:") {
        let values = list
            .split(',')
            .map(|s| parse_rational(s).map(LambdaPoly::constant))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        return Ok(InitialSequence::Explicit(values));
    }
    Err(format!(
        "--init must be harmonic, geom:<p/q>, or explicit:<c0,c1,..>, got `{spec}`"
    ))
}

pub fn run(args: &TableArgs) -> i32 {
    if args.n_max > N_MAX_CAP {
        return usage_error(&format!("--n-max {} exceeds the cap {N_MAX_CAP}", args.n_max));
    }
    let mode = match LambdaMode::parse(&args.lambda) {
        Ok(mode) => mode,
        Err(msg) => return usage_error(&msg),
    };
    if args.format == TableFormat::Csv && matches!(mode, LambdaMode::Sym) {
        return usage_error("csv output needs a rational --lambda; polynomials do not fit csv cells");
    }
    let x = match parse_rational(&args.x) {
        Ok(x) => x,
        Err(_) => return usage_error(&format!("--x must be an exact rational, got `{}`", args.x)),
    };

    let started = Instant::now();
    let result = build(args, &x);
    let mut built = match result {
        Ok(doc) => doc,
        Err(msg) => return usage_error(&msg),
    };
    if let (Built::Triangle(rows), Some(k_max)) = (&mut built, args.k_max) {
        for row in rows {
            row.truncate(k_max + 1);
        }
    }
    if args.profile {
        eprintln!(
            "profile: table={} n_max={} wall_ms={}",
            kind_name(args.kind),
            args.n_max,
            started.elapsed().as_millis()
        );
    }

    match args.format {
        TableFormat::Json => emit_json(args, &mode, built),
        TableFormat::Csv => emit_csv(&mode, built),
    }
    0
}

/// Rows of λ-polynomials for any table kind; triangles and trapezoids are
/// ragged, sequences have a single row.
enum Built {
    Triangle(Vec<Vec<LambdaPoly>>),
    Sequence(Vec<LambdaPoly>),
    Trapezoid(Vec<Vec<LambdaPoly>>, String),
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Stirling1 => "stirling1",
        TableKind::Stirling2 => "stirling2",
        TableKind::Stirling1Deg => "stirling1deg",
        TableKind::Stirling2Deg => "stirling2deg",
        TableKind::RStirling2 => "rstirling2",
        TableKind::Bernoulli => "bernoulli",
        TableKind::Euler => "euler",
        TableKind::Beta => "beta",
        TableKind::Trapezoid => "trapezoid",
    }
}

fn build(args: &TableArgs, x: &degen_core::Rational) -> Result<Built, String> {
    let n_max = args.n_max;
    let family = |f: PolyFamily| -> Result<Built, String> {
        family_values(f, x, n_max, args.order)
            .map(|v| Built::Sequence(v.values))
            .map_err(|e| e.to_string())
    };
    match args.kind {
        TableKind::Stirling1 => Ok(Built::Triangle(
            shared(StirlingKind::Classical1).rows_up_to(n_max),
        )),
        TableKind::Stirling2 => Ok(Built::Triangle(
            shared(StirlingKind::Classical2).rows_up_to(n_max),
        )),
        TableKind::Stirling1Deg => Ok(Built::Triangle(
            shared(StirlingKind::Degenerate1).rows_up_to(n_max),
        )),
        TableKind::Stirling2Deg => Ok(Built::Triangle(
            shared(StirlingKind::Degenerate2).rows_up_to(n_max),
        )),
        TableKind::RStirling2 => {
            let mut rows = Vec::with_capacity(n_max + 1);
            for n in 0..=n_max {
                let row = (0..=n)
                    .map(|k| r_stirling2_convolution(n, k, args.r))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                rows.push(row);
            }
            Ok(Built::Triangle(rows))
        }
        TableKind::Bernoulli => family(PolyFamily::CarlitzBernoulli),
        TableKind::Euler => family(PolyFamily::DegenerateEuler),
        TableKind::Beta => family(PolyFamily::FullyDegenerateBernoulli),
        TableKind::Trapezoid => {
            let init = parse_init(&args.init)?;
            let trapezoid =
                build_trapezoid(&init, args.r, n_max).map_err(|e| e.to_string())?;
            Ok(Built::Trapezoid(trapezoid.rows().to_vec(), init.label()))
        }
    }
}

fn emit_json(args: &TableArgs, mode: &LambdaMode, built: Built) {
    let table = kind_name(args.kind).to_string();
    match built {
        Built::Triangle(rows) => {
            let rows = rows
                .iter()
                .map(|row| row.iter().map(|p| mode.render(p)).collect())
                .collect();
            print_json(&TriangleDoc {
                schema: schema(),
                table,
                lambda: mode.label(),
                n_max: args.n_max,
                k_max: args.k_max,
                r: (args.kind == TableKind::RStirling2).then_some(args.r),
                rows,
            });
        }
        Built::Sequence(values) => {
            print_json(&SequenceDoc {
                schema: schema(),
                table,
                lambda: mode.label(),
                x: args.x.clone(),
                n_max: args.n_max,
                values: values.iter().map(|p| mode.render(p)).collect(),
            });
        }
        Built::Trapezoid(rows, init) => {
            print_json(&TrapezoidDoc {
                schema: schema(),
                table,
                lambda: mode.label(),
                init,
                r: args.r,
                n_max: args.n_max,
                rows: rows
                    .iter()
                    .map(|row| row.iter().map(|p| mode.render(p)).collect())
                    .collect(),
            });
        }
    }
}

fn emit_csv(mode: &LambdaMode, built: Built) {
    match built {
        Built::Triangle(rows) => {
            println!("n,k,value");
            for (n, row) in rows.iter().enumerate() {
                for (k, p) in row.iter().enumerate() {
                    println!("{n},{k},{}", mode.render_csv(p));
                }
            }
        }
        Built::Sequence(values) => {
            println!("n,value");
            for (n, p) in values.iter().enumerate() {
                println!("{n},{}", mode.render_csv(p));
            }
        }
        Built::Trapezoid(rows, _) => {
            println!("n,m,value");
            for (n, row) in rows.iter().enumerate() {
                for (m, p) in row.iter().enumerate() {
                    println!("{n},{m},{}", mode.render_csv(p));
                }
            }
        }
    }
}
