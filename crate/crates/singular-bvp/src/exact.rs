//! Closed-form exact solutions for constant-coefficient problems.
//!
//! For `ε y″ + p y′ + q y = r` with constant p, q the general solution is
//! a pair of characteristic exponentials plus a particular part obtained
//! by undetermined coefficients; fitting both boundary conditions gives
//! the exact solution that every error table in [`crate::bench`] measures
//! against.
//!
//! Two numerical hazards are handled structurally rather than by
//! tolerance tuning: the smaller root of `ε λ² + p λ + q = 0` is computed
//! from the rationalized numerator (the naive formula loses all digits
//! for ε → 0), and each exponential is anchored at the endpoint where it
//! is largest, so nothing overflows even though the fast root scales like
//! 1/ε.

use crate::coef::CoefExpr;
use crate::error::Error;
use crate::linode::{self, HomogeneousBasis};
use crate::problem::TwoPointBVP;
use crate::Result;

pub use crate::linode::{ForcingTerm, RootPair};

/// Exact solution with closed-form evaluators for y, y′, y″.
#[derive(Debug, Clone)]
pub struct ExactSolution {
    /// Characteristic roots of `ε λ² + p λ + q = 0`.
    pub roots: RootPair,
    /// Homogeneous constants (C₁, C₂) w.r.t. the anchored basis.
    pub constants: (f64, f64),
    /// Particular part as a sum of closed-form terms.
    pub particular: Vec<ForcingTerm>,
    basis: HomogeneousBasis,
}

impl ExactSolution {
    /// y(x)
    pub fn value(&self, x: f64) -> f64 {
        let (c1, c2) = self.constants;
        c1 * self.basis.value(0, x) + c2 * self.basis.value(1, x)
            + linode::terms_value(&self.particular, x)
    }

    /// y′(x), exact.
    pub fn derivative(&self, x: f64) -> f64 {
        let (c1, c2) = self.constants;
        c1 * self.basis.d1(0, x) + c2 * self.basis.d1(1, x)
            + linode::terms_d1(&self.particular, x)
    }

    /// y″(x), exact (no finite differences).
    pub fn second_derivative(&self, x: f64) -> f64 {
        let (c1, c2) = self.constants;
        c1 * self.basis.d2(0, x) + c2 * self.basis.d2(1, x)
            + linode::terms_d2(&self.particular, x)
    }
}

/// Roots of the characteristic equation `ε λ² + p λ + q = 0`.
///
/// `RealDistinct::plus` carries the `+√disc` branch; the small-magnitude
/// root always comes from the rationalized form, never from cancelling
/// nearly equal terms. A discriminant within `1e−12·max(p², |4εq|)` of
/// zero counts as a double root.
pub fn characteristic_roots(epsilon: f64, p: f64, q: f64) -> RootPair {
    linode::quadratic_roots(epsilon, p, q)
}

/// Constructs the exact solution of a constant-coefficient problem.
pub fn exact_solution(bvp: &TwoPointBVP) -> Result<ExactSolution> {
    let p = bvp
        .p
        .constant_value()
        .ok_or_else(|| Error::ExactUnavailable("p must be constant".into()))?;
    let q = bvp
        .q
        .constant_value()
        .ok_or_else(|| Error::ExactUnavailable("q must be constant".into()))?;
    let (r_poly, r_exps) = bvp
        .r
        .split_poly_exp()
        .ok_or_else(|| Error::ExactUnavailable("r outside polynomial + exponential class".into()))?;

    let eps = bvp.epsilon;
    let mut particular: Vec<ForcingTerm> = Vec::new();
    if r_poly.iter().any(|&c| c != 0.0) {
        if q == 0.0 && p == 0.0 {
            return Err(Error::ExactUnavailable(
                "p = q = 0 leaves a pure second-derivative operator".into(),
            ));
        }
        particular.extend(linode::particular_polynomial(eps, p, q, &r_poly));
    }
    for (c, k) in &r_exps {
        particular.push(linode::particular_exponential(eps, p, q, *c, *k));
    }

    let roots = characteristic_roots(eps, p, q);
    let basis = HomogeneousBasis::from_roots(roots, bvp.a, bvp.b);
    let constants = linode::fit_two_point(
        &basis,
        &particular,
        bvp.a,
        bvp.alpha,
        bvp.b,
        bvp.beta,
    )?;
    Ok(ExactSolution {
        roots,
        constants,
        particular,
        basis,
    })
}
