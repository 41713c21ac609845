//! Exact generation of the generalized summation polynomials `F_r(x)` and
//! `F*_r(x)`, exact verification of the summation identities they appear in,
//! and a floating-point layer that uses them to correct downsampled sums and
//! accelerate series.
//!
//! Module map:
//! - [`rational`], [`poly`], [`series`]: exact arithmetic.
//! - [`family`], [`sturm`]: the polynomial families, classical numbers,
//!   recurrences and root counting.
//! - [`summation`], [`verify`]: finite-difference calculus and identity checks.
//! - [`signal`]: sampled-data applications.

pub mod error;
pub mod family;
pub mod poly;
pub mod rational;
pub mod series;
pub mod signal;
pub mod sturm;
pub mod summation;
pub mod verify;

pub use error::{Error, Result};
pub use family::{classical_numbers, generate_family, CoefficientTable, FrFamily, SpecialPoint};
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::{PowerSeries, Series};
pub use signal::{ErrorReport, TimeSeries};
pub use summation::SumIdentityReport;
