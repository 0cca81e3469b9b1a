//! Exact-arithmetic toolkit for degenerate Stirling numbers, degenerate
//! r-Stirling numbers, and the degenerate Bernoulli/Euler polynomial
//! families.
//!
//! Every quantity is an exact polynomial in the deformation parameter λ over
//! arbitrary-precision rationals, and every identity the crate knows about is
//! checked by computing both sides through independent routes: recurrence
//! propagation against closed forms, generating-function coefficient
//! extraction against convolution and basis-change formulas, operator
//! iteration against its Stirling expansion, and λ = 0 specializations
//! against brute-force enumeration and classical expansions.
//!
//! All value types are immutable after construction and all operations are
//! pure; the row caches behind the Stirling triangles follow a
//! single-writer/immutable-after-publish contract, so everything here is safe
//! to share across threads.

pub mod binomial;
pub mod error;
pub mod genfun;
pub mod lambda_poly;
pub mod operator;
pub mod rational;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod stirling;
pub mod tpoly;
pub mod verify;

pub use error::{Error, Result};
pub use lambda_poly::LambdaPoly;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use report::{LambdaPolyWire, VerificationReport};
pub use series::TruncSeries;
pub use tpoly::TPoly;
