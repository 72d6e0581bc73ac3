//! Uniformly valid closed-form approximations for singularly perturbed
//! linear two-point boundary value problems
//!
//! ```text
//!     ε y″(x) + p(x) y′(x) + q(x) y(x) = r(x),   a ≤ x ≤ b,
//!     y(a) = α,  y(b) = β,   0 < ε ≪ 1,
//! ```
//!
//! where the small parameter ε multiplies the highest derivative, so the
//! reduced (ε → 0) equation drops an order and a boundary layer of width
//! O(ε) forms at one end of the interval.
//!
//! The crate builds, entirely in closed form:
//!
//! - the **outer** solution of the reduced equation `p y′ + q y = r`
//!   ([`outer`]),
//! - the **MMAE composite** — inner layer solution matched to the outer
//!   one, combined as outer + inner − common limit ([`mmae`]),
//! - the **one-term SCEM** approximation — outer solution plus a
//!   complementary layer function fixed by imposing the original boundary
//!   conditions exactly, with no matching step ([`scem`]). The balanced
//!   variant keeps only the dominant-order complementary equation; the
//!   full (unbalanced) variant solves it exactly and, for constant
//!   coefficients, reproduces the exact solution,
//! - the **exact solution** oracle for constant-coefficient problems
//!   ([`exact`]),
//! - discrete error norms and boundary-residual diagnostics ([`metrics`]),
//! - built-in benchmark problems with transcribed reference error tables
//!   and grid/norm calibration against them ([`bench`]).
//!
//! Every approximation is a pure immutable value; evaluation never
//! discretizes anything, so the only error measured by [`metrics`] is the
//! asymptotic error of the method itself.

pub mod approx;
pub mod bench;
pub mod coef;
pub mod config;
pub mod error;
pub mod exact;
mod linode;
pub mod metrics;
pub mod mmae;
pub mod outer;
pub mod problem;
pub mod scem;

pub use approx::{Approximation, MethodKind};
pub use coef::CoefExpr;
pub use error::Error;
pub use exact::{ExactSolution, RootPair};
pub use metrics::{ErrorReport, Grid, NormVariant};
pub use mmae::CompositeApproximation;
pub use outer::OuterSolution;
pub use problem::{LayerInfo, LayerSide, RawProblem, TwoPointBVP};
pub use scem::ScemApproximation;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
