//! Exact counts of standard Young tableaux of battery shapes `[(m^n), a, k]`.
//!
//! A battery shape is a rectangle of width `m` and height `n` with a column of
//! `a` extra cells stacked above its `k`-th column. Counts come from terminating
//! hypergeometric sums, closed rational formulas, a summation over bullet
//! profiles valid for every `k`, and an independent order-ideal DP used as an
//! oracle.
//!
//! ```
//! use battery_syt::{count, BatteryShape, Method};
//!
//! let shape = BatteryShape::over_rectangle(2, 2, 1, 2).unwrap();
//! assert_eq!(count(&shape, Method::Hyper, 120).unwrap().to_string(), "5");
//! ```

pub mod battery_count;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod hypergeom;
pub mod oracle_dp;
pub mod shapes;

pub use battery_count::{count, CountResult, Method};
pub use error::{Error, Result};
pub use exact_arith::{factorize, Factorization, Integer, Natural, Rational};
pub use shapes::{BatteryShape, Partition, SkewShape, TruncatedShape};
