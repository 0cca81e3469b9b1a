//! `degen eval`: one quantity, printed as an exact wire object (symbolic λ)
//! or an exact rational string (rational λ).

use crate::output::{usage_error, LambdaMode};
use clap::{Args, ValueEnum};
use degen_core::genfun::{carlitz_bernoulli, degenerate_euler, fully_degenerate_bernoulli};
use degen_core::stirling::{
    degenerate_falling, r_stirling2_convolution, stirling1_degenerate, stirling2_degenerate,
};
use degen_core::{parse_rational, LambdaPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// S_{1,λ}(n, k)
    #[value(name = "s1deg")]
    S1Deg,
    /// S_{2,λ}(n, k)
    #[value(name = "s2deg")]
    S2Deg,
    /// degenerate r-Stirling {n+r brace k+r}_λ
    #[value(name = "rs2deg")]
    Rs2Deg,
    /// Carlitz degenerate Bernoulli B_n(x|λ)
    #[value(name = "carlitzB")]
    CarlitzB,
    /// degenerate Euler ℰ_{n,λ}(x)
    #[value(name = "eulerDeg")]
    EulerDeg,
    /// fully degenerate Bernoulli β_{n,λ}(x)
    #[value(name = "beta")]
    Beta,
    /// degenerate falling factorial (x)_{n,λ}
    #[value(name = "fallingDeg")]
    FallingDeg,
}

#[derive(Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,

    #[arg(long)]
    pub n: usize,

    #[arg(long)]
    pub k: Option<usize>,

    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<i64>,

    /// Evaluation point x (exact rational)
    #[arg(long)]
    pub x: Option<String>,

    /// "sym" for a coefficient list in λ, or an exact rational to evaluate at
    #[arg(long, default_value = "sym")]
    pub lambda: String,

    /// Series truncation order (raised to n automatically)
    #[arg(long, env = "DEGEN_ORDER", default_value_t = 12)]
    pub order: usize,
}

fn need_k(args: &EvalArgs) -> Result<usize, String> {
    args.k.ok_or("this quantity needs --k".to_string())
}

fn need_x(args: &EvalArgs) -> Result<Rational, String> {
    let s = args.x.as_ref().ok_or("this quantity needs --x")?;
    parse_rational(s).map_err(|_| format!("--x must be an exact rational, got `{s}`"))
}

pub fn run(args: &EvalArgs) -> i32 {
    let mode = match LambdaMode::parse(&args.lambda) {
        Ok(mode) => mode,
        Err(msg) => return usage_error(&msg),
    };
    let order = args.order.max(args.n);
    let value: Result<LambdaPoly, String> = (|| {
        let n = args.n;
        match args.quantity {
            Quantity::S1Deg => stirling1_degenerate(n, need_k(args)?).map_err(|e| e.to_string()),
            Quantity::S2Deg => stirling2_degenerate(n, need_k(args)?).map_err(|e| e.to_string()),
            Quantity::Rs2Deg => {
                let k = need_k(args)?;
                let r = args.r.ok_or("this quantity needs --r")?;
                r_stirling2_convolution(n, k, r).map_err(|e| e.to_string())
            }
            Quantity::CarlitzB => {
                carlitz_bernoulli(n, &need_x(args)?, order).map_err(|e| e.to_string())
            }
            Quantity::EulerDeg => {
                degenerate_euler(n, &need_x(args)?, order).map_err(|e| e.to_string())
            }
            Quantity::Beta => {
                fully_degenerate_bernoulli(n, &need_x(args)?, order).map_err(|e| e.to_string())
            }
            Quantity::FallingDeg => Ok(degenerate_falling(&need_x(args)?, n)),
        }
    })();
    match value {
        Ok(p) => {
            println!("{}", mode.render(&p));
            0
        }
        Err(msg) => usage_error(&msg),
    }
}
