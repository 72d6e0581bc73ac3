//! Matched asymptotic expansions: leading-order inner solution, matching
//! limit, and the uniformly valid composite approximation.
//!
//! The inner equation at leading order is `Y₀″ + p(x₀) Y₀′ = 0` in the
//! stretched variable, so the layer correction is a single decaying
//! exponential. One free constant comes from the layer-side boundary
//! condition; the other is fixed by matching against the outer limit.
//! The composite adds inner and outer and subtracts their common limit:
//!
//! ```text
//!     y ≈ y₀(x) + Y₀(x̄) − m,    m = lim y₀ at the layer point.
//! ```
//!
//! The composite satisfies the layer-side BC exactly and the opposite BC
//! only asymptotically — the residual decays like e^{−ρ(b−a)/ε}.

use crate::error::Error;
use crate::outer::OuterSolution;
use crate::problem::{LayerInfo, LayerSide, TwoPointBVP};
use crate::Result;

/// Leading-order inner (layer) solution in the stretched variable.
#[derive(Debug, Clone, PartialEq)]
pub struct InnerSolution {
    /// Matching constant (far-field limit).
    pub m: f64,
    /// Layer-side boundary value, Y₀(0) = v.
    pub v: f64,
    /// Decay rate ρ = |p(x₀)|.
    pub rho: f64,
    /// Layer side (left or right end).
    pub side: LayerSide,
    /// Perturbation parameter of the owning problem.
    pub epsilon: f64,
}

impl InnerSolution {
    /// Y₀(x̄): `m + (v − m)·e^{−ρ·x̄}` for a left-end layer (x̄ ≥ 0),
    /// mirrored for a right-end layer (x̄ ≤ 0).
    pub fn eval_stretched(&self, xbar: f64) -> f64 {
        let arg = match self.side {
            LayerSide::LeftEnd => -self.rho * xbar,
            LayerSide::RightEnd => self.rho * xbar,
            LayerSide::Interior(_) => unreachable!("inner solution exists for end layers only"),
        };
        self.m + (self.v - self.m) * arg.exp()
    }
}

/// MMAE composite approximation: outer + inner − common limit.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeApproximation {
    /// Outer part.
    pub outer: OuterSolution,
    /// Matching constant m = y₀(x₀).
    pub m: f64,
    /// Layer-side boundary value.
    pub v: f64,
    /// Decay rate ρ = |p(x₀)|.
    pub rho: f64,
    /// Layer point.
    pub x0: f64,
    /// Perturbation parameter.
    pub epsilon: f64,
}

impl CompositeApproximation {
    /// Evaluates `y₀(x) + (v − m)·e^{−ρ·|x − x₀|/ε}`.
    ///
    /// The exponent decays into the domain interior from either layer
    /// side; for tiny ε the term underflows to 0, which is the correct
    /// limit.
    pub fn value(&self, x: f64) -> f64 {
        let decay = (-self.rho * (x - self.x0).abs() / self.epsilon).exp();
        self.outer.value(x) + (self.v - self.m) * decay
    }
}

/// The matching limit: the outer solution's value at the layer point.
///
/// For the supported closed-form class y₀ is continuous on [a,b], so the
/// common limit of inner and outer expansions is just y₀(x₀); no symbolic
/// limit machinery is needed.
pub fn matching_limit(outer: &OuterSolution, layer: &LayerInfo) -> f64 {
    outer.value(layer.x0)
}

/// Builds the leading-order inner solution with matching constant `m`.
pub fn inner_leading(bvp: &TwoPointBVP, layer: &LayerInfo, m: f64) -> Result<InnerSolution> {
    let v = match layer.side {
        LayerSide::LeftEnd => bvp.alpha,
        LayerSide::RightEnd => bvp.beta,
        LayerSide::Interior(_) => return Err(Error::InteriorLayer),
    };
    debug_assert!(layer.rho > 0.0, "end layers have positive decay rate");
    Ok(InnerSolution {
        m,
        v,
        rho: layer.rho,
        side: layer.side.clone(),
        epsilon: bvp.epsilon,
    })
}

/// Assembles the composite approximation from its parts.
pub fn composite(
    outer: &OuterSolution,
    inner: &InnerSolution,
    m: f64,
    layer: &LayerInfo,
) -> CompositeApproximation {
    CompositeApproximation {
        outer: outer.clone(),
        m,
        v: inner.v,
        rho: inner.rho,
        x0: layer.x0,
        epsilon: inner.epsilon,
    }
}

/// Outer solve → matching → inner → composite, in one call.
pub fn build_composite(bvp: &TwoPointBVP, layer: &LayerInfo) -> Result<CompositeApproximation> {
    let outer = crate::outer::solve_reduced(bvp, layer)?;
    let m = matching_limit(&outer, layer);
    let inner = inner_leading(bvp, layer, m)?;
    Ok(composite(&outer, &inner, m, layer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::Benchmark;
    use std::f64::consts::E;

    fn parts(bench: Benchmark, eps: f64) -> (TwoPointBVP, LayerInfo, CompositeApproximation) {
        let bvp = bench.bvp(eps).unwrap();
        let layer = bvp.classify();
        let comp = build_composite(&bvp, &layer).unwrap();
        (bvp, layer, comp)
    }

    #[test]
    fn matching_limits_of_the_benchmarks() {
        for (bench, expected) in [
            (Benchmark::Illustrative, E),
            (Benchmark::Example1, -1.0),
            (Benchmark::Example2, 1.0 - (-1.0f64).exp()),
        ] {
            let bvp = bench.bvp(0.1).unwrap();
            let layer = bvp.classify();
            let outer = crate::outer::solve_reduced(&bvp, &layer).unwrap();
            let m = matching_limit(&outer, &layer);
            assert!((m - expected).abs() < 1e-14, "{bench:?}: m = {m}");
        }
    }

    #[test]
    fn inner_satisfies_layer_bc_and_far_field() {
        let bvp = Benchmark::Illustrative.bvp(0.1).unwrap();
        let layer = bvp.classify();
        let outer = crate::outer::solve_reduced(&bvp, &layer).unwrap();
        let m = matching_limit(&outer, &layer);
        let inner = inner_leading(&bvp, &layer, m).unwrap();
        assert_eq!(inner.eval_stretched(0.0), 0.0); // v = α = 0 exactly
        // Y₀(x̄) = e(1 − e^{−2x̄})
        for xbar in [0.1, 0.35, 2.0] {
            let want = E * (1.0 - (-2.0 * xbar).exp());
            assert!((inner.eval_stretched(xbar) - want).abs() < 1e-14);
        }
        assert!((inner.eval_stretched(400.0) - m).abs() < 1e-14);
    }

    #[test]
    fn right_end_inner_mirrors_the_decay() {
        let bvp = Benchmark::Example2.bvp(0.1).unwrap();
        let layer = bvp.classify();
        let outer = crate::outer::solve_reduced(&bvp, &layer).unwrap();
        let m = matching_limit(&outer, &layer);
        let inner = inner_leading(&bvp, &layer, m).unwrap();
        // Y₀(x̄) = (1 − e^{−1})(1 − e^{x̄}) for x̄ ≤ 0
        for xbar in [0.0, -0.5, -3.0] {
            let want = (1.0 - (-1.0f64).exp()) * (1.0 - xbar.exp());
            assert!((inner.eval_stretched(xbar) - want).abs() < 1e-14);
        }
    }

    #[test]
    fn composite_matches_closed_form_illustrative() {
        for eps in [0.1, 0.01, 0.6, 1.0] {
            let (_, _, comp) = parts(Benchmark::Illustrative, eps);
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                let want = (1.0 - x).exp() - (1.0 - 2.0 * x / eps).exp();
                assert!(
                    (comp.value(x) - want).abs() <= 1e-12,
                    "eps={eps} x={x}: {} vs {want}",
                    comp.value(x)
                );
            }
        }
    }

    #[test]
    fn composite_matches_closed_form_example1() {
        for eps in [0.0001, 0.05, 1.0] {
            let (_, _, comp) = parts(Benchmark::Example1, eps);
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                let want = x * x + x - 1.0 + (-x / eps).exp();
                assert!((comp.value(x) - want).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn composite_matches_closed_form_example2() {
        for eps in [0.005, 0.1, 1.0] {
            let (_, _, comp) = parts(Benchmark::Example2, eps);
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                let want = 1.0 - (-x).exp() + ((-1.0f64).exp() - 1.0) * ((x - 1.0) / eps).exp();
                assert!((comp.value(x) - want).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn layer_side_bc_is_exact() {
        for bench in [
            Benchmark::Illustrative,
            Benchmark::Example1,
            Benchmark::Example2,
        ] {
            let (bvp, layer, comp) = parts(bench, 0.3);
            let v = if layer.x0 == bvp.a { bvp.alpha } else { bvp.beta };
            assert!(
                (comp.value(layer.x0) - v).abs() <= 1e-14,
                "{bench:?}: {} vs {v}",
                comp.value(layer.x0)
            );
        }
    }

    #[test]
    fn opposite_bc_residual_is_the_analytic_tail() {
        // illustrative: residual at x = 1 is e^{1−2/ε}
        for eps in [0.1, 0.3, 0.6] {
            let (bvp, _, comp) = parts(Benchmark::Illustrative, eps);
            let residual = (comp.value(bvp.b) - bvp.beta).abs();
            let analytic = (1.0 - 2.0 / eps).exp();
            assert!(
                (residual - analytic).abs() <= 1e-13,
                "eps={eps}: residual {residual} vs analytic {analytic}"
            );
        }
    }

    #[test]
    fn tiny_epsilon_underflows_quietly() {
        let (_, _, comp) = parts(Benchmark::Illustrative, 1e-6);
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            assert!(comp.value(x).is_finite());
        }
    }
}
