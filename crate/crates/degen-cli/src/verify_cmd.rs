//! `degen verify`: run a named suite (or all of them) and report verdicts.

use crate::output::usage_error;
use clap::{Args, ValueEnum};
use degen_core::report::merge_reports;
use degen_core::verify::{run_suite, SuiteParams, SUITE_NAMES};
use degen_core::Error;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// One of: lemma1, inversion, rstirling3way, theorem2, theorem3,
    /// theorem4, theorem5, eq11, limits, all
    pub suite: String,

    #[arg(long)]
    pub n_max: Option<usize>,

    #[arg(long)]
    pub k_max: Option<usize>,

    #[arg(long, allow_negative_numbers = true)]
    pub r_max: Option<i64>,

    /// Largest t-degree of the random operator test polynomials
    #[arg(long)]
    pub deg_max: Option<usize>,

    /// Number of random polynomials in the operator suite
    #[arg(long)]
    pub polys: Option<usize>,

    /// Series truncation order
    #[arg(long, env = "DEGEN_ORDER")]
    pub order: Option<usize>,

    /// Seed for randomized cases; recorded in the report
    #[arg(long, env = "DEGEN_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for independent cases (1 = sequential)
    #[arg(long, env = "DEGEN_JOBS", default_value_t = 1)]
    pub jobs: usize,

    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,

    /// Report wall time per suite on stderr
    #[arg(long)]
    pub profile: bool,
}

pub fn run(args: &VerifyArgs) -> i32 {
    if args.jobs == 0 {
        return usage_error("--jobs must be at least 1");
    }
    if let Some(r) = args.r_max {
        if r < 0 {
            return usage_error(&format!("--r-max must be nonnegative, got {r}"));
        }
    }
    let params = SuiteParams {
        n_max: args.n_max,
        k_max: args.k_max,
        r_max: args.r_max,
        order: args.order,
        deg_max: args.deg_max,
        poly_count: args.polys,
        seed: args.seed,
    };

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(args.jobs).build() {
        Ok(pool) => pool,
        Err(e) => return usage_error(&format!("cannot build worker pool: {e}")),
    };

    let report = pool.install(|| {
        if args.suite == "all" {
            // drive sub-suites here so --profile can time each one
            let mut parts = Vec::new();
            for name in SUITE_NAMES.iter().filter(|n| **n != "all") {
                let started = Instant::now();
                let part = run_suite(name, &params)?;
                if args.profile {
                    eprintln!(
                        "profile: suite={name} wall_ms={}",
                        started.elapsed().as_millis()
                    );
                }
                parts.push(part);
            }
            Ok(merge_reports("all", params.seed, parts))
        } else {
            let started = Instant::now();
            let report = run_suite(&args.suite, &params);
            if args.profile {
                eprintln!(
                    "profile: suite={} wall_ms={}",
                    args.suite,
                    started.elapsed().as_millis()
                );
            }
            report
        }
    });

    let report = match report {
        Ok(report) => report,
        Err(e @ (Error::UnknownSuite(_) | Error::NegativeR(_))) => {
            return usage_error(&e.to_string())
        }
        Err(e) => return usage_error(&format!("suite failed to run: {e}")),
    };

    match args.format {
        ReportFormat::Json => {
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
        }
        ReportFormat::Text => print!("{}", report.to_text()),
    }
    if report.all_passed() {
        0
    } else {
        1
    }
}
