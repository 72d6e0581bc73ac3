//! Problem specification, normalization and boundary-layer classification.
//!
//! The canonical problem is
//!
//! ```text
//!     ε y″ + p(x) y′ + q(x) y = r(x),   y(a) = α,  y(b) = β,   ε > 0.
//! ```
//!
//! A problem written with a negative second-derivative coefficient
//! (`−ε y″ + …`) is ingested by negating all four coefficient functions,
//! which leaves the solution set unchanged.
//!
//! The sign of p locates the layer: p > 0 on [a,b] puts it at the left
//! end, p < 0 at the right end, and a sign change inside the interval
//! produces interior layers, which are detected and reported but not
//! solved.

use crate::coef::CoefExpr;
use crate::error::Error;
use crate::Result;

/// Default sample count for sign classification of non-polynomial p.
pub const DEFAULT_CLASSIFY_SAMPLES: usize = 257;

/// A problem as stated, before normalization: the second-derivative
/// coefficient `second_coef` is ±ε and may be negative.
#[derive(Debug, Clone, PartialEq)]
pub struct RawProblem {
    /// Signed coefficient of y″ (±ε).
    pub second_coef: f64,
    /// Coefficient of y′.
    pub p: CoefExpr,
    /// Coefficient of y.
    pub q: CoefExpr,
    /// Right-hand side.
    pub r: CoefExpr,
    /// Left endpoint.
    pub a: f64,
    /// Right endpoint.
    pub b: f64,
    /// Boundary value at `a`.
    pub alpha: f64,
    /// Boundary value at `b`.
    pub beta: f64,
}

/// Canonical two-point boundary value problem with `+ε y″`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoPointBVP {
    /// Perturbation parameter, strictly positive.
    pub epsilon: f64,
    /// Coefficient of y′.
    pub p: CoefExpr,
    /// Coefficient of y.
    pub q: CoefExpr,
    /// Right-hand side.
    pub r: CoefExpr,
    /// Left endpoint.
    pub a: f64,
    /// Right endpoint.
    pub b: f64,
    /// Boundary value at `a`.
    pub alpha: f64,
    /// Boundary value at `b`.
    pub beta: f64,
    /// Always true after `normalize`: the y″ coefficient is exactly +ε.
    pub canonical: bool,
}

/// Which end of the interval carries the boundary layer.
#[derive(Debug, Clone, PartialEq)]
pub enum LayerSide {
    /// p > 0 on [a,b]: layer at x = a.
    LeftEnd,
    /// p < 0 on [a,b]: layer at x = b.
    RightEnd,
    /// p changes sign or vanishes; abscissae of the detected zeros.
    Interior(Vec<f64>),
}

/// Layer classification result: side, layer point and decay data.
///
/// The stretching scale is ξ(ε) = ε itself: the layer variable is
/// `x̄ = (x − x0)/ε` throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerInfo {
    /// Side of the layer.
    pub side: LayerSide,
    /// Layer point: `a` for a left-end layer, `b` for a right-end layer,
    /// the first detected zero of p for interior layers.
    pub x0: f64,
    /// Decay rate |p(x0)|; positive for end layers, 0 for interior.
    pub rho: f64,
}

impl LayerInfo {
    /// True for left- or right-end layers (the solvable cases).
    pub fn is_end_layer(&self) -> bool {
        matches!(self.side, LayerSide::LeftEnd | LayerSide::RightEnd)
    }
}

impl TwoPointBVP {
    /// Builds an already-canonical problem, validating ε > 0 and a < b.
    pub fn new(
        epsilon: f64,
        p: CoefExpr,
        q: CoefExpr,
        r: CoefExpr,
        interval: (f64, f64),
        alpha: f64,
        beta: f64,
    ) -> Result<Self> {
        normalize(&RawProblem {
            second_coef: epsilon,
            p,
            q,
            r,
            a: interval.0,
            b: interval.1,
            alpha,
            beta,
        })
    }

    /// Re-embeds the canonical problem as a raw spec (`second_coef = +ε`).
    pub fn as_raw(&self) -> RawProblem {
        RawProblem {
            second_coef: self.epsilon,
            p: self.p.clone(),
            q: self.q.clone(),
            r: self.r.clone(),
            a: self.a,
            b: self.b,
            alpha: self.alpha,
            beta: self.beta,
        }
    }

    /// Same problem at a different ε.
    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        let mut raw = self.as_raw();
        raw.second_coef = epsilon;
        normalize(&raw)
    }

    /// Layer classification with the default sample count.
    pub fn classify(&self) -> LayerInfo {
        classify_layer(self, DEFAULT_CLASSIFY_SAMPLES)
    }
}

/// Normalizes a raw problem to the canonical `+ε y″` form.
///
/// A negative `second_coef` flips the sign of every coefficient function,
/// an exact transformation of the equation. Solutions of the normalized
/// and raw problems are identical.
pub fn normalize(raw: &RawProblem) -> Result<TwoPointBVP> {
    let c = raw.second_coef;
    if c == 0.0 {
        return Err(Error::NotSingularlyPerturbed);
    }
    if !c.is_finite() {
        return Err(Error::InvalidProblem(format!(
            "second-derivative coefficient {c} is not finite"
        )));
    }
    if !(raw.a < raw.b) {
        return Err(Error::InvalidProblem(format!(
            "interval endpoints must satisfy a < b, got [{}, {}]",
            raw.a, raw.b
        )));
    }
    if !raw.alpha.is_finite() || !raw.beta.is_finite() {
        return Err(Error::InvalidProblem(
            "boundary values must be finite".into(),
        ));
    }
    let (epsilon, p, q, r) = if c > 0.0 {
        (c, raw.p.clone(), raw.q.clone(), raw.r.clone())
    } else {
        (-c, raw.p.negate(), raw.q.negate(), raw.r.negate())
    };
    Ok(TwoPointBVP {
        epsilon,
        p,
        q,
        r,
        a: raw.a,
        b: raw.b,
        alpha: raw.alpha,
        beta: raw.beta,
        canonical: true,
    })
}

/// Classifies the layer side from the sign of p over [a,b].
///
/// Polynomial p of degree ≤ 2 gets exact root analysis; anything else is
/// sampled at `samples` uniform points. A zero of p inside the interval
/// (or a sampled sign change) yields [`LayerSide::Interior`].
pub fn classify_layer(bvp: &TwoPointBVP, samples: usize) -> LayerInfo {
    assert!(samples >= 2, "classify_layer needs at least 2 samples");
    let side = match bvp.p.polynomial_coeffs() {
        Some(coeffs) if coeffs.len() <= 3 => classify_polynomial(&coeffs, bvp.a, bvp.b),
        _ => classify_by_sampling(&bvp.p, bvp.a, bvp.b, samples),
    };
    match side {
        LayerSide::LeftEnd => LayerInfo {
            side: LayerSide::LeftEnd,
            x0: bvp.a,
            rho: bvp.p.evaluate(bvp.a).abs(),
        },
        LayerSide::RightEnd => LayerInfo {
            side: LayerSide::RightEnd,
            x0: bvp.b,
            rho: bvp.p.evaluate(bvp.b).abs(),
        },
        LayerSide::Interior(zeros) => {
            let x0 = zeros.first().copied().unwrap_or(bvp.a);
            LayerInfo {
                side: LayerSide::Interior(zeros),
                x0,
                rho: 0.0,
            }
        }
    }
}

/// Exact sign analysis for polynomials up to degree 2.
fn classify_polynomial(coeffs: &[f64], a: f64, b: f64) -> LayerSide {
    let mut roots: Vec<f64> = Vec::new();
    match coeffs.len() {
        1 => {
            // constant: no roots unless identically zero
            if coeffs[0] == 0.0 {
                return LayerSide::Interior(vec![]);
            }
        }
        2 => {
            let root = -coeffs[0] / coeffs[1];
            roots.push(root);
        }
        3 => {
            let (c0, c1, c2) = (coeffs[0], coeffs[1], coeffs[2]);
            let disc = c1 * c1 - 4.0 * c2 * c0;
            if disc == 0.0 {
                roots.push(-c1 / (2.0 * c2));
            } else if disc > 0.0 {
                let s = disc.sqrt();
                // larger-magnitude root first to avoid cancellation
                let r1 = (-c1 - c1.signum() * s) / (2.0 * c2);
                let r2 = c0 / (c2 * r1);
                roots.push(r1.min(r2));
                roots.push(r1.max(r2));
            }
        }
        _ => unreachable!("degree > 2 goes through sampling"),
    }
    let inside: Vec<f64> = roots.into_iter().filter(|r| *r >= a && *r <= b).collect();
    if !inside.is_empty() {
        return LayerSide::Interior(inside);
    }
    let mid = 0.5 * (a + b);
    let v = eval_poly(coeffs, mid);
    if v > 0.0 {
        LayerSide::LeftEnd
    } else {
        LayerSide::RightEnd
    }
}

fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Sign sampling for general coefficient expressions.
fn classify_by_sampling(p: &CoefExpr, a: f64, b: f64, samples: usize) -> LayerSide {
    let n = samples;
    let mut zeros: Vec<f64> = Vec::new();
    let mut pos = false;
    let mut neg = false;
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..n {
        let x = if i == n - 1 {
            b
        } else {
            a + (b - a) * (i as f64) / ((n - 1) as f64)
        };
        let v = p.evaluate(x);
        if v == 0.0 {
            zeros.push(x);
        } else if v > 0.0 {
            pos = true;
        } else {
            neg = true;
        }
        if let Some((px, pv)) = prev {
            if pv * v < 0.0 {
                // linear-interpolation estimate of the crossing
                zeros.push(px - pv * (x - px) / (v - pv));
            }
        }
        prev = Some((x, v));
    }
    if !zeros.is_empty() || (pos && neg) {
        zeros.sort_by(|u, v| u.partial_cmp(v).unwrap());
        zeros.dedup();
        LayerSide::Interior(zeros)
    } else if pos {
        LayerSide::LeftEnd
    } else {
        LayerSide::RightEnd
    }
}

/// Stretched layer coordinate `x̄ = (x − x0)/ε`.
pub fn stretch(x: f64, layer: &LayerInfo, epsilon: f64) -> f64 {
    (x - layer.x0) / epsilon
}

/// Inverse of [`stretch`]: `x = x0 + ε·x̄`.
pub fn unstretch(xbar: f64, layer: &LayerInfo, epsilon: f64) -> f64 {
    layer.x0 + epsilon * xbar
}
