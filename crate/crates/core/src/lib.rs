//! Conditional approximations of `dⁿ/dsⁿ ln ζ(s)` in the critical strip from
//! truncated von Mangoldt sums with a closed-form compensating integral,
//! cross-checked against Euler–Maclaurin ζ evaluation, Cauchy-integral
//! differentiation and the generalized Li-sum identities.
//!
//! ```
//! use logzeta::{arithmetic::build_mangoldt, logderiv::approx_log_derivative};
//! use num_complex::Complex64;
//!
//! let table = build_mangoldt(10_000).unwrap();
//! let approx = approx_log_derivative(&table, 1, Complex64::new(2.0, 0.0), 10_000).unwrap();
//! assert!((approx.re + 0.5699610).abs() < 2e-3);
//! ```

// `!(x > 0.0)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arithmetic;
pub mod cli;
pub mod combinatorics;
pub mod error;
mod extended;
pub mod li;
pub mod logderiv;
pub mod special;
pub mod summation;

pub use arithmetic::{BoundParameters, MangoldtTable};
pub use error::{Error, Result};
pub use logderiv::{ApproxReport, ScanAxis, ScanSeries};
pub use special::PrecisionConfig;
