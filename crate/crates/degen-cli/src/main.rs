//! `degen`: exact tables, pointwise evaluation, and identity verification
//! for the degenerate Stirling and Bernoulli/Euler families.
//!
//! Exit codes: 0 all pass, 1 verification failure, 2 usage error.

mod eval;
mod output;
mod table;
mod verify_cmd;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "degen",
    version,
    about = "Exact degenerate Stirling / Bernoulli / Euler tables and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a triangle, polynomial family, or recurrence trapezoid (JSON or CSV)
    Table(table::TableArgs),
    /// Run a verification suite and report per-case verdicts
    Verify(verify_cmd::VerifyArgs),
    /// Evaluate a single quantity and print it
    Eval(eval::EvalArgs),
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Table(args) => table::run(&args),
        Command::Verify(args) => verify_cmd::run(&args),
        Command::Eval(args) => eval::run(&args),
    };
    std::process::exit(code);
}
