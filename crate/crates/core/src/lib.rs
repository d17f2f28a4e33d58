//! Numerics for the cardioid domain Ω = ℘(𝔻), ℘(z) = 1 + z·e^z, and the class of
//! starlike functions f with zf'/f ≺ ℘.
//!
//! - [`series`]: truncated complex power series (products, exp/log, reversion).
//! - [`solve`]: bracketed roots, root scans, 1-D and 2-D bounded maximization.
//! - [`geometry`]: boundary profile of Ω, membership, extremal bounds, disks.
//! - [`radii`]: the named radius catalog and inclusion thresholds.
//! - [`coeffs`]: Bell numbers, coefficient functionals, Hankel determinants.
//! - [`subordination`]: sampled subordination checks and radius sharpness.
//! - [`cli`]: command implementations behind the `cardioid` binary.

pub mod cli;
pub mod coeffs;
pub mod curves;
mod error;
pub mod geometry;
pub mod radii;
pub mod series;
pub mod solve;
pub mod subordination;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Euler's number, re-exported for brevity in formulas.
pub const E: f64 = std::f64::consts::E;
