//! Large-parameter asymptotics of
//!
//! ```text
//! S(x; t) = 3F2(1, (1+t)k/2, (1+t)k/2 + 1/2; tk + 1, k + 1; x),   0 < x, t <= 1,
//! ```
//!
//! as `k -> inf`, checked against a double-double direct-summation oracle.
//!
//! * [`kernels`]: double-double accumulation, log-gamma, erfcx, log-domain products.
//! * [`series`]: direct summation of `pFq` series, the S oracle, and F_m.
//! * [`asymptotic`]: derived parameters, expansion coefficients, and the truncated expansions of S.
//! * [`uniform`]: saddle-point and uniform erfc approximations of F_0.
//! * [`cli`]: table presets, sweeps and report formatting behind the `hypasym` binary.

// Domain checks are written as `!(x > 0.0)` so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotic;
pub mod cli;
mod error;
pub mod kernels;
pub mod series;
pub mod uniform;

pub use error::{Error, Result};
