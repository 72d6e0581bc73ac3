//! Crate-wide error type.

use thiserror::Error;

/// Errors produced while constructing or evaluating approximations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// The second-derivative coefficient is zero: the problem is not
    /// singularly perturbed and none of the constructions apply.
    #[error("not singularly perturbed: second-derivative coefficient is zero")]
    NotSingularlyPerturbed,

    /// Problem data violates a basic precondition (ε ≤ 0, a ≥ b, ...).
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    /// The convection coefficient changes sign inside the interval, so the
    /// layer is interior. Detected and reported, never solved.
    #[error("interior layer unsupported (p changes sign inside the interval)")]
    InteriorLayer,

    /// The reduced equation has no closed-form solution in the supported
    /// coefficient class (constant p, q; polynomial or exponential r).
    #[error("outer solver: closed form unavailable ({0})")]
    OuterClosedFormUnavailable(String),

    /// The full complementary equation has a forcing outside the closed-form
    /// class (polynomial or exponential in the stretched variable).
    #[error("full SCEM: closed form unavailable ({0})")]
    ScemClosedFormUnavailable(String),

    /// No closed-form exact solution for this coefficient class.
    #[error("exact oracle unavailable ({0})")]
    ExactUnavailable(String),

    /// A two-point boundary fit produced a (numerically) singular system.
    #[error("boundary-condition system is singular (|det| = {det:e})")]
    SingularBoundarySystem {
        /// Magnitude of the rejected determinant.
        det: f64,
    },

    /// An evaluation produced a non-finite number.
    #[error("non-finite value from {method} at x = {x}")]
    NonFinite {
        /// Name of the evaluator that failed.
        method: String,
        /// Abscissa at which the failure occurred.
        x: f64,
    },

    /// Config-file parsing failure; `line` is 1-based.
    #[error("config parse error at line {line}, key `{key}`: {message}")]
    ConfigParse {
        /// 1-based line number in the config file.
        line: usize,
        /// Key being parsed when the error occurred.
        key: String,
        /// Human-readable description.
        message: String,
    },

    /// Problem id not among the built-in benchmarks.
    #[error("unknown problem id `{0}`; valid ids: illustrative, example1, example2")]
    UnknownProblem(String),

    /// A table row failed; carries the row's ε and the underlying cause.
    #[error("table row ε = {epsilon}: {source}")]
    Row {
        /// The ε of the failing row.
        epsilon: f64,
        /// Underlying failure.
        #[source]
        source: Box<Error>,
    },
}
