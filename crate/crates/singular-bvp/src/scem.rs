//! One-term successive complementary expansion method.
//!
//! SCEM posits a uniformly valid form up front,
//!
//! ```text
//!     y ≈ y₀(x) + Ψ₀(x̄),      x̄ = (x − x₀)/ε,
//! ```
//!
//! and fixes the complementary function Ψ₀ by imposing the *original*
//! boundary conditions at both ends — no matching step. Substituting the
//! ansatz into the canonical equation and multiplying by ε leaves the
//! complementary equation
//!
//! ```text
//!     Ψ″ + p Ψ′ + εq Ψ = −ε²·y₀″(x₀ + ε x̄).
//! ```
//!
//! Two resolutions are built here:
//!
//! - **balanced**: keep only the dominant-order terms, `Ψ₀″ + p(x₀) Ψ₀′ = 0`.
//!   The result is one decaying exponential plus a constant, with both
//!   boundary values met exactly — the workhorse approximation of the
//!   error tables.
//! - **full** (unbalanced): solve the complementary equation exactly via
//!   characteristic roots and undetermined coefficients. For constant
//!   coefficients the assembled y₀ + Ψ satisfies the original ODE and both
//!   BCs identically, i.e. it *is* the exact solution; this is checked
//!   against the independent oracle in [`crate::exact`] rather than
//!   assumed.

use crate::error::Error;
use crate::exact::{ForcingTerm, RootPair};
use crate::linode::{self, HomogeneousBasis};
use crate::outer::OuterSolution;
use crate::problem::{LayerInfo, TwoPointBVP};
use crate::Result;

/// Which complementary equation was solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementaryMode {
    /// Dominant-order balance `Ψ₀″ + p(x₀) Ψ₀′ = 0`.
    Balanced,
    /// Full equation `Ψ″ + pΨ′ + εqΨ = −ε²·y₀″(x₀ + εx̄)`.
    Full,
}

/// Complementary layer function Ψ in the stretched variable.
#[derive(Debug, Clone)]
pub struct ComplementaryFn {
    /// Balanced or full solve.
    pub mode: ComplementaryMode,
    /// Constants (A, B) multiplying the two homogeneous basis functions.
    pub constants: (f64, f64),
    /// Characteristic roots of the homogeneous part (in x̄).
    pub roots: RootPair,
    /// Particular part; empty in balanced mode.
    pub particular: Vec<ForcingTerm>,
    /// Layer point.
    pub x0: f64,
    /// Perturbation parameter.
    pub epsilon: f64,
    basis: HomogeneousBasis,
}

impl ComplementaryFn {
    /// Ψ(x̄)
    pub fn eval_stretched(&self, xbar: f64) -> f64 {
        let (a, b) = self.constants;
        a * self.basis.value(0, xbar) + b * self.basis.value(1, xbar)
            + linode::terms_value(&self.particular, xbar)
    }

    /// dΨ/dx̄
    pub fn d1_stretched(&self, xbar: f64) -> f64 {
        let (a, b) = self.constants;
        a * self.basis.d1(0, xbar) + b * self.basis.d1(1, xbar)
            + linode::terms_d1(&self.particular, xbar)
    }

    /// d²Ψ/dx̄²
    pub fn d2_stretched(&self, xbar: f64) -> f64 {
        let (a, b) = self.constants;
        a * self.basis.d2(0, xbar) + b * self.basis.d2(1, xbar)
            + linode::terms_d2(&self.particular, xbar)
    }
}

/// One-term SCEM approximation `y₀(x) + Ψ₀((x − x₀)/ε)`.
#[derive(Debug, Clone)]
pub struct ScemApproximation {
    /// Outer part.
    pub outer: OuterSolution,
    /// Complementary layer part.
    pub complementary: ComplementaryFn,
}

impl ScemApproximation {
    /// Evaluates the approximation at `x`.
    pub fn value(&self, x: f64) -> f64 {
        let xbar = (x - self.complementary.x0) / self.complementary.epsilon;
        self.outer.value(x) + self.complementary.eval_stretched(xbar)
    }

    /// Balanced or full.
    pub fn mode(&self) -> ComplementaryMode {
        self.complementary.mode
    }
}

/// Shared setup: stretched endpoints and the complementary boundary values
/// Ψ(x̄_a) = α − y₀(a), Ψ(x̄_b) = β − y₀(b).
fn complementary_bcs(
    bvp: &TwoPointBVP,
    layer: &LayerInfo,
    outer: &OuterSolution,
) -> (f64, f64, f64, f64) {
    let eps = bvp.epsilon;
    let ta = (bvp.a - layer.x0) / eps;
    let tb = (bvp.b - layer.x0) / eps;
    let ga = bvp.alpha - outer.value(bvp.a);
    let gb = bvp.beta - outer.value(bvp.b);
    (ta, tb, ga, gb)
}

/// Solves the balanced complementary equation `Ψ₀″ + p(x₀) Ψ₀′ = 0` with
/// exact two-point boundary values.
///
/// The homogeneous basis is {1, e^{−p(x₀)·x̄}} anchored at the layer end,
/// so only the interior-decaying exponential is ever evaluated; the 2×2
/// boundary system cannot be singular for ρ > 0 on a finite interval.
pub fn complementary_balanced(
    bvp: &TwoPointBVP,
    layer: &LayerInfo,
    outer: &OuterSolution,
) -> Result<ComplementaryFn> {
    if !layer.is_end_layer() {
        return Err(Error::InteriorLayer);
    }
    let p0 = bvp.p.evaluate(layer.x0);
    debug_assert!(p0 != 0.0, "end layers have nonzero p(x0)");
    let (ta, tb, ga, gb) = complementary_bcs(bvp, layer, outer);
    let roots = linode::quadratic_roots(1.0, p0, 0.0);
    let basis = HomogeneousBasis::from_roots(roots, ta, tb);
    let constants = linode::fit_two_point(&basis, &[], ta, ga, tb, gb)?;
    Ok(ComplementaryFn {
        mode: ComplementaryMode::Balanced,
        constants,
        roots,
        particular: Vec::new(),
        x0: layer.x0,
        epsilon: bvp.epsilon,
        basis,
    })
}

/// Assembles the balanced one-term SCEM approximation.
pub fn scem_balanced(outer: &OuterSolution, comp: &ComplementaryFn) -> ScemApproximation {
    debug_assert_eq!(comp.mode, ComplementaryMode::Balanced);
    ScemApproximation {
        outer: outer.clone(),
        complementary: comp.clone(),
    }
}

/// Solves the full complementary equation
/// `Ψ″ + pΨ′ + εqΨ = −ε²·y₀″(x₀ + εx̄)` exactly.
///
/// The homogeneous part comes from the roots of `μ² + pμ + εq = 0`
/// (complex pairs use the real trigonometric basis); the forcing is the
/// outer curvature re-expressed in the stretched variable and resolved by
/// undetermined coefficients, with a degree bump when the forcing rate
/// hits a characteristic root. Constants then satisfy both original BCs.
pub fn complementary_full(
    bvp: &TwoPointBVP,
    layer: &LayerInfo,
    outer: &OuterSolution,
) -> Result<ComplementaryFn> {
    if !layer.is_end_layer() {
        return Err(Error::InteriorLayer);
    }
    let p = bvp
        .p
        .constant_value()
        .ok_or_else(|| Error::ScemClosedFormUnavailable("p must be constant".into()))?;
    let q = bvp
        .q
        .constant_value()
        .ok_or_else(|| Error::ScemClosedFormUnavailable("q must be constant".into()))?;
    let (curv_poly, curv_exps) = outer.second_derivative.split_poly_exp().ok_or_else(|| {
        Error::ScemClosedFormUnavailable("outer curvature outside closed-form class".into())
    })?;

    let eps = bvp.epsilon;
    let x0 = layer.x0;
    let a0 = eps * q;
    let mut particular: Vec<ForcingTerm> = Vec::new();

    // polynomial part of −ε²·y₀″(x₀ + εx̄), expanded in x̄
    if curv_poly.iter().any(|&c| c != 0.0) {
        let mut forcing = compose_affine(&curv_poly, x0, eps);
        for c in forcing.iter_mut() {
            *c *= -eps * eps;
        }
        particular.extend(linode::particular_polynomial(1.0, p, a0, &forcing));
    }
    // exponential parts: c·e^{kx} becomes c·e^{k x₀}·e^{kε·x̄}
    for (c, k) in &curv_exps {
        let coef = -eps * eps * c * (k * x0).exp();
        particular.push(linode::particular_exponential(1.0, p, a0, coef, k * eps));
    }

    let (ta, tb, ga, gb) = complementary_bcs(bvp, layer, outer);
    let roots = linode::quadratic_roots(1.0, p, a0);
    let basis = HomogeneousBasis::from_roots(roots, ta, tb);
    let constants = linode::fit_two_point(&basis, &particular, ta, ga, tb, gb)?;
    Ok(ComplementaryFn {
        mode: ComplementaryMode::Full,
        constants,
        roots,
        particular,
        x0,
        epsilon: eps,
        basis,
    })
}

/// Assembles the full (unbalanced) SCEM approximation.
pub fn scem_full(outer: &OuterSolution, comp: &ComplementaryFn) -> ScemApproximation {
    debug_assert_eq!(comp.mode, ComplementaryMode::Full);
    ScemApproximation {
        outer: outer.clone(),
        complementary: comp.clone(),
    }
}

/// Outer solve → balanced complementary → approximation.
pub fn build_balanced(bvp: &TwoPointBVP, layer: &LayerInfo) -> Result<ScemApproximation> {
    let outer = crate::outer::solve_reduced(bvp, layer)?;
    let comp = complementary_balanced(bvp, layer, &outer)?;
    Ok(scem_balanced(&outer, &comp))
}

/// Outer solve → full complementary → approximation.
pub fn build_full(bvp: &TwoPointBVP, layer: &LayerInfo) -> Result<ScemApproximation> {
    let outer = crate::outer::solve_reduced(bvp, layer)?;
    let comp = complementary_full(bvp, layer, &outer)?;
    Ok(scem_full(&outer, &comp))
}

/// Coefficients of `poly(x0 + scale·t)` in powers of t.
fn compose_affine(coeffs: &[f64], x0: f64, scale: f64) -> Vec<f64> {
    let mut res = vec![0.0];
    for &c in coeffs.iter().rev() {
        let mut next = vec![0.0; res.len() + 1];
        for (i, &rc) in res.iter().enumerate() {
            next[i] += rc * x0;
            next[i + 1] += rc * scale;
        }
        next[0] += c;
        res = next;
    }
    while res.len() > 1 && *res.last().unwrap() == 0.0 {
        res.pop();
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::Benchmark;
    use crate::exact::exact_solution;
    use crate::mmae;
    use std::f64::consts::E;

    fn setup(bench: Benchmark, eps: f64) -> (TwoPointBVP, LayerInfo, OuterSolution) {
        let bvp = bench.bvp(eps).unwrap();
        let layer = bvp.classify();
        let outer = crate::outer::solve_reduced(&bvp, &layer).unwrap();
        (bvp, layer, outer)
    }

    #[test]
    fn balanced_complementary_of_illustrative() {
        let eps = 0.1;
        let (bvp, layer, outer) = setup(Benchmark::Illustrative, eps);
        let comp = complementary_balanced(&bvp, &layer, &outer).unwrap();
        // Ψ₀(0) = −e
        assert!((comp.eval_stretched(0.0) + E).abs() < 1e-14);
        // Ψ₀(x̄) = e(e^{−2x̄} − 1)/(e^{−2/ε} − 1) − e
        let ee = (-2.0 / eps).exp();
        for xbar in [0.0, 0.5, 2.0, 10.0] {
            let want = E * ((-2.0 * xbar).exp() - 1.0) / (ee - 1.0) - E;
            assert!(
                (comp.eval_stretched(xbar) - want).abs() < 1e-13,
                "xbar={xbar}"
            );
        }
    }

    #[test]
    fn balanced_complementary_of_example1() {
        let eps = 0.05;
        let (bvp, layer, outer) = setup(Benchmark::Example1, eps);
        let comp = complementary_balanced(&bvp, &layer, &outer).unwrap();
        let ee = (-1.0 / eps).exp();
        for xbar in [0.0, 1.0, 7.0, 20.0] {
            let want = ((-xbar).exp() - ee) / (1.0 - ee);
            assert!((comp.eval_stretched(xbar) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn balanced_complementary_of_example2() {
        let eps = 0.1;
        let (bvp, layer, outer) = setup(Benchmark::Example2, eps);
        let comp = complementary_balanced(&bvp, &layer, &outer).unwrap();
        let ee = (-1.0 / eps).exp();
        for xbar in [0.0, -1.0, -5.0] {
            let want = ((-1.0f64).exp() - 1.0) * (xbar.exp() - ee) / (1.0 - ee);
            assert!((comp.eval_stretched(xbar) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn balanced_solves_its_equation_identically() {
        for bench in [
            Benchmark::Illustrative,
            Benchmark::Example1,
            Benchmark::Example2,
        ] {
            let (bvp, layer, outer) = setup(bench, 0.2);
            let p0 = bvp.p.evaluate(layer.x0);
            let comp = complementary_balanced(&bvp, &layer, &outer).unwrap();
            for xbar in [-3.0, -1.0, 0.0, 0.7, 4.0] {
                let res = comp.d2_stretched(xbar) + p0 * comp.d1_stretched(xbar);
                assert!(res.abs() < 1e-12, "{bench:?}: {res}");
            }
        }
    }

    #[test]
    fn balanced_scem_hits_both_bcs() {
        for bench in [
            Benchmark::Illustrative,
            Benchmark::Example1,
            Benchmark::Example2,
        ] {
            for eps in [0.0001, 0.01, 0.3, 1.0] {
                let (bvp, layer, _) = setup(bench, eps);
                let approx = build_balanced(&bvp, &layer).unwrap();
                assert!(
                    (approx.value(bvp.a) - bvp.alpha).abs() <= 1e-12,
                    "{bench:?} eps={eps}: at a"
                );
                assert!(
                    (approx.value(bvp.b) - bvp.beta).abs() <= 1e-12,
                    "{bench:?} eps={eps}: at b"
                );
            }
        }
    }

    #[test]
    fn balanced_scem_value_spot_check() {
        // illustrative, ε = 0.1, x = 0.05: e^{0.95} + e(e^{−1}−1)/(e^{−20}−1) − e
        let (bvp, layer, _) = setup(Benchmark::Illustrative, 0.1);
        let approx = build_balanced(&bvp, &layer).unwrap();
        assert!((approx.value(0.05) - 1.5857096628574889).abs() < 1e-13);
    }

    #[test]
    fn full_particular_term_of_illustrative() {
        // forcing −ε² e^{1−εx̄}: ansatz G e^{1−εx̄} with G = −1,
        // stored as coefficient G·e = −e at rate −ε
        let eps = 0.1;
        let (bvp, layer, outer) = setup(Benchmark::Illustrative, eps);
        let comp = complementary_full(&bvp, &layer, &outer).unwrap();
        assert_eq!(comp.particular.len(), 1);
        let term = comp.particular[0];
        assert_eq!(term.pow, 0);
        assert!((term.rate + eps).abs() < 1e-16);
        assert!((term.coef + E).abs() < 1e-12, "coef = {}", term.coef);
    }

    #[test]
    fn full_particular_term_of_example1_is_resonant() {
        // q = 0: forcing −2ε² resolves to the linear term −2ε²·x̄
        let eps = 0.05;
        let (bvp, layer, outer) = setup(Benchmark::Example1, eps);
        let comp = complementary_full(&bvp, &layer, &outer).unwrap();
        assert_eq!(comp.particular.len(), 1);
        let term = comp.particular[0];
        assert_eq!((term.pow, term.rate), (1, 0.0));
        assert!((term.coef + 2.0 * eps * eps).abs() < 1e-15);
    }

    #[test]
    fn full_particular_term_of_example2() {
        // forcing ε² e^{−1−εx̄}: coefficient e^{−1} at rate −ε
        let eps = 0.1;
        let (bvp, layer, outer) = setup(Benchmark::Example2, eps);
        let comp = complementary_full(&bvp, &layer, &outer).unwrap();
        assert_eq!(comp.particular.len(), 1);
        let term = comp.particular[0];
        assert_eq!(term.pow, 0);
        assert!((term.rate + eps).abs() < 1e-16);
        assert!((term.coef - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn full_scem_reproduces_the_exact_solution() {
        for bench in [
            Benchmark::Illustrative,
            Benchmark::Example1,
            Benchmark::Example2,
        ] {
            for eps in [0.005, 0.01, 0.1, 0.3] {
                let (bvp, layer, _) = setup(bench, eps);
                let full = build_full(&bvp, &layer).unwrap();
                let exact = exact_solution(&bvp).unwrap();
                let mut worst = 0.0f64;
                for i in 0..=1000 {
                    let x = bvp.a + (bvp.b - bvp.a) * i as f64 / 1000.0;
                    worst = worst.max((full.value(x) - exact.value(x)).abs());
                }
                assert!(worst <= 1e-9, "{bench:?} eps={eps}: max diff {worst}");
            }
        }
    }

    #[test]
    fn full_scem_handles_complex_roots() {
        // illustrative with ε > 1/2: μ² + 2μ + 2ε has complex roots
        let (bvp, layer, _) = setup(Benchmark::Illustrative, 0.8);
        let full = build_full(&bvp, &layer).unwrap();
        assert!(matches!(
            full.complementary.roots,
            RootPair::ComplexPair { .. }
        ));
        let exact = exact_solution(&bvp).unwrap();
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            assert!((full.value(x) - exact.value(x)).abs() <= 1e-10);
        }
    }

    #[test]
    fn balanced_and_composite_agree_for_small_epsilon() {
        for bench in [
            Benchmark::Illustrative,
            Benchmark::Example1,
            Benchmark::Example2,
        ] {
            for eps in [0.01, 0.001] {
                let (bvp, layer, _) = setup(bench, eps);
                let balanced = build_balanced(&bvp, &layer).unwrap();
                let comp = mmae::build_composite(&bvp, &layer).unwrap();
                for i in 0..=100 {
                    let x = bvp.a + (bvp.b - bvp.a) * i as f64 / 100.0;
                    let diff = (balanced.value(x) - comp.value(x)).abs();
                    assert!(diff <= 1e-8, "{bench:?} eps={eps} x={x}: {diff}");
                }
            }
        }
    }

    #[test]
    fn no_evaluation_overflows_across_the_epsilon_range() {
        for bench in [
            Benchmark::Illustrative,
            Benchmark::Example1,
            Benchmark::Example2,
        ] {
            for eps in [1e-6, 1e-4, 1e-2, 0.5, 1.0] {
                let (bvp, layer, _) = setup(bench, eps);
                let balanced = build_balanced(&bvp, &layer).unwrap();
                let full = build_full(&bvp, &layer).unwrap();
                for i in 0..=100 {
                    let x = bvp.a + (bvp.b - bvp.a) * i as f64 / 100.0;
                    assert!(balanced.value(x).is_finite(), "{bench:?} eps={eps} x={x}");
                    assert!(full.value(x).is_finite(), "{bench:?} eps={eps} x={x}");
                }
            }
        }
    }

    #[test]
    fn compose_affine_expands_correctly() {
        // (x0 + s t)² with x0=2, s=3: 4 + 12t + 9t²
        assert_eq!(
            compose_affine(&[0.0, 0.0, 1.0], 2.0, 3.0),
            vec![4.0, 12.0, 9.0]
        );
        // constants pass through
        assert_eq!(compose_affine(&[5.0], 2.0, 3.0), vec![5.0]);
    }
}
