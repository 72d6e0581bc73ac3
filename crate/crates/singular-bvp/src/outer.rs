//! Outer (reduced-equation) solution.
//!
//! Setting ε = 0 in the canonical problem drops the order: the reduced
//! equation is `p y′ + q y = r`, first order, so it can carry only one of
//! the two boundary conditions. The outer solution imposes the condition
//! *opposite* the layer — the layer absorbs the other one.
//!
//! Supported closed-form class: constant p and q, with r polynomial,
//! exponential-linear, or a sum of those. This keeps the solution inside
//! [`CoefExpr`], so its derivatives are exact; a quadrature fallback is
//! deliberately absent.

use crate::coef::CoefExpr;
use crate::error::Error;
use crate::problem::{LayerInfo, LayerSide, TwoPointBVP};
use crate::Result;

/// Closed-form solution of the reduced equation with one imposed BC.
#[derive(Debug, Clone, PartialEq)]
pub struct OuterSolution {
    /// The solution as a symbolic expression.
    pub expression: CoefExpr,
    /// Exact first derivative.
    pub first_derivative: CoefExpr,
    /// Exact second derivative (feeds the SCEM complementary forcing).
    pub second_derivative: CoefExpr,
    /// Abscissa at which the boundary condition was imposed.
    pub imposed_at: f64,
    /// The imposed boundary value.
    pub imposed_value: f64,
}

impl OuterSolution {
    /// y₀(x)
    pub fn value(&self, x: f64) -> f64 {
        self.expression.evaluate(x)
    }

    /// y₀′(x)
    pub fn derivative(&self, x: f64) -> f64 {
        self.first_derivative.evaluate(x)
    }

    /// y₀″(x), exact from the closed form.
    pub fn second_derivative(&self, x: f64) -> f64 {
        self.second_derivative.evaluate(x)
    }
}

/// Solves `p y′ + q y = r` with the boundary condition opposite the layer.
///
/// For q = 0 the particular part is the exact antiderivative of r/p; for
/// q ≠ 0 and polynomial r it uses undetermined coefficients of matching
/// degree. Exponential forcing cε^{kx} resolves to G·e^{kx} with
/// G = c/(pk + q) unless pk + q vanishes, which is outside the closed-form
/// class and reported as such.
pub fn solve_reduced(bvp: &TwoPointBVP, layer: &LayerInfo) -> Result<OuterSolution> {
    if !layer.is_end_layer() {
        return Err(Error::InteriorLayer);
    }
    let p = bvp
        .p
        .constant_value()
        .ok_or_else(|| Error::OuterClosedFormUnavailable("p must be constant".into()))?;
    let q = bvp
        .q
        .constant_value()
        .ok_or_else(|| Error::OuterClosedFormUnavailable("q must be constant".into()))?;
    if p == 0.0 {
        return Err(Error::OuterClosedFormUnavailable(
            "p vanishes; reduced equation is not first order".into(),
        ));
    }
    let (r_poly, r_exps) = bvp.r.split_poly_exp().ok_or_else(|| {
        Error::OuterClosedFormUnavailable("r outside polynomial + exponential class".into())
    })?;

    let mut parts: Vec<CoefExpr> = Vec::new();

    // polynomial particular part
    if r_poly.iter().any(|&c| c != 0.0) {
        parts.push(CoefExpr::poly(particular_poly(p, q, &r_poly)));
    }
    // exponential particular parts, by superposition
    for (c, k) in &r_exps {
        let denom = p * k + q;
        let scale = (p * k).abs().max(q.abs());
        if denom.abs() <= 1e-12 * scale {
            return Err(Error::OuterClosedFormUnavailable(format!(
                "resonant exponential forcing (rate {k} solves the homogeneous equation)"
            )));
        }
        parts.push(CoefExpr::ExpLinear {
            c: c / denom,
            k: *k,
        });
    }

    // impose the BC opposite the layer
    let (x_bc, bc_value) = match layer.side {
        LayerSide::LeftEnd => (bvp.b, bvp.beta),
        LayerSide::RightEnd => (bvp.a, bvp.alpha),
        LayerSide::Interior(_) => unreachable!("end layer checked above"),
    };
    let particular_at_bc: f64 = parts.iter().map(|e| e.evaluate(x_bc)).sum();
    let amplitude = bc_value - particular_at_bc;
    let homogeneous = if q == 0.0 {
        CoefExpr::Constant(amplitude)
    } else {
        let k_h = -q / p;
        CoefExpr::ExpLinear {
            c: amplitude * (-k_h * x_bc).exp(),
            k: k_h,
        }
    };
    parts.insert(0, homogeneous);

    let expression = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        CoefExpr::Sum(parts)
    };
    let first_derivative = expression.differentiate();
    let second_derivative = first_derivative.differentiate();
    Ok(OuterSolution {
        expression,
        first_derivative,
        second_derivative,
        imposed_at: x_bc,
        imposed_value: bc_value,
    })
}

/// Particular polynomial for `p y′ + q y = Σ rhs[i] xⁱ`.
fn particular_poly(p: f64, q: f64, rhs: &[f64]) -> Vec<f64> {
    let d = rhs.len() - 1;
    if q != 0.0 {
        let mut coeffs = vec![0.0; d + 1];
        for i in (0..=d).rev() {
            let mut v = rhs[i];
            if i + 1 <= d {
                v -= p * (i as f64 + 1.0) * coeffs[i + 1];
            }
            coeffs[i] = v / q;
        }
        coeffs
    } else {
        // antiderivative of r/p, constant term absorbed by the homogeneous part
        let mut coeffs = vec![0.0; d + 2];
        for (i, &c) in rhs.iter().enumerate() {
            coeffs[i + 1] = c / (p * (i as f64 + 1.0));
        }
        coeffs
    }
}
