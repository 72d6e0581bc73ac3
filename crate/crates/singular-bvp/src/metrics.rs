//! Grids, discrete error norms and boundary-residual diagnostics.
//!
//! Errors are always measured against the exact oracle. The norm variants
//! differ only in normalization:
//!
//! ```text
//!     RSS        = √(Σ eᵢ²)              (plain root-sum-square)
//!     H_WEIGHTED = √(h·Σ eᵢ²),  h = (b−a)/(N−1)
//!     RMS        = √(Σ eᵢ²/N)
//! ```
//!
//! The reference tables in [`crate::bench`] use RSS over a 101-point grid;
//! that choice is recovered by calibration rather than assumed, and both
//! the variant and N are recorded in every output.

use crate::approx::Approximation;
use crate::error::Error;
use crate::exact::ExactSolution;
use crate::problem::TwoPointBVP;
use crate::{MethodKind, Result};

/// Uniform evaluation grid with exact endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    /// Left endpoint.
    pub a: f64,
    /// Right endpoint.
    pub b: f64,
    /// Point count, ≥ 2.
    pub n: usize,
}

impl Grid {
    /// Builds a grid of `n ≥ 2` uniform points from `a` to `b` inclusive.
    pub fn new(a: f64, b: f64, n: usize) -> Result<Grid> {
        if n < 2 {
            return Err(Error::InvalidProblem(format!(
                "grid needs at least 2 points, got {n}"
            )));
        }
        if !(a < b) {
            return Err(Error::InvalidProblem(format!(
                "grid endpoints must satisfy a < b, got [{a}, {b}]"
            )));
        }
        Ok(Grid { a, b, n })
    }

    /// Grid spanning the problem interval.
    pub fn for_problem(bvp: &TwoPointBVP, n: usize) -> Result<Grid> {
        Grid::new(bvp.a, bvp.b, n)
    }

    /// The i-th point; first is exactly `a`, last exactly `b`.
    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        if i == 0 {
            self.a
        } else if i == self.n - 1 {
            self.b
        } else {
            self.a + (self.b - self.a) * (i as f64) / ((self.n - 1) as f64)
        }
    }

    /// Uniform spacing h = (b−a)/(N−1).
    pub fn spacing(&self) -> f64 {
        (self.b - self.a) / ((self.n - 1) as f64)
    }

    /// Iterator over all points.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }
}

/// Normalization of the discrete L² norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormVariant {
    /// Root-sum-square, no normalization.
    Rss,
    /// √h-weighted (converges to the continuous L² norm).
    HWeighted,
    /// Root-mean-square.
    Rms,
}

impl NormVariant {
    /// Machine name used in CLI flags and reports.
    pub fn name(&self) -> &'static str {
        match self {
            NormVariant::Rss => "rss",
            NormVariant::HWeighted => "hweighted",
            NormVariant::Rms => "rms",
        }
    }

    /// Inverse of [`NormVariant::name`].
    pub fn parse(name: &str) -> Option<NormVariant> {
        match name {
            "rss" => Some(NormVariant::Rss),
            "hweighted" => Some(NormVariant::HWeighted),
            "rms" => Some(NormVariant::Rms),
            _ => None,
        }
    }
}

impl std::fmt::Display for NormVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-ε error summary for one method on one problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    /// Perturbation parameter of the run.
    pub epsilon: f64,
    /// Method measured.
    pub method: MethodKind,
    /// Discrete L² error in the selected variant.
    pub l2: f64,
    /// Maximum pointwise error on the grid.
    pub max: f64,
    /// |approx(a) − α|.
    pub boundary_residual_a: f64,
    /// |approx(b) − β|.
    pub boundary_residual_b: f64,
    /// Norm variant used for `l2`.
    pub variant: NormVariant,
    /// Grid point count used.
    pub grid_n: usize,
}

fn checked_value(approx: &Approximation, x: f64) -> Result<f64> {
    let v = approx.value(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite {
            method: approx.kind().name().to_string(),
            x,
        })
    }
}

/// Discrete L² error of `approx` against the exact oracle over `grid`.
pub fn l2_error(
    approx: &Approximation,
    exact: &ExactSolution,
    grid: &Grid,
    variant: NormVariant,
) -> Result<f64> {
    let mut sum_sq = 0.0;
    for x in grid.points() {
        let e = checked_value(approx, x)? - exact.value(x);
        if !e.is_finite() {
            return Err(Error::NonFinite {
                method: "exact".to_string(),
                x,
            });
        }
        sum_sq += e * e;
    }
    Ok(match variant {
        NormVariant::Rss => sum_sq.sqrt(),
        NormVariant::HWeighted => (grid.spacing() * sum_sq).sqrt(),
        NormVariant::Rms => (sum_sq / grid.n as f64).sqrt(),
    })
}

/// Maximum pointwise error of `approx` against the exact oracle.
pub fn max_error(approx: &Approximation, exact: &ExactSolution, grid: &Grid) -> Result<f64> {
    let mut worst = 0.0f64;
    for x in grid.points() {
        let e = (checked_value(approx, x)? - exact.value(x)).abs();
        worst = worst.max(e);
    }
    Ok(worst)
}

/// Residuals of the two original boundary conditions.
pub fn boundary_residual(approx: &Approximation, bvp: &TwoPointBVP) -> (f64, f64) {
    (
        (approx.value(bvp.a) - bvp.alpha).abs(),
        (approx.value(bvp.b) - bvp.beta).abs(),
    )
}

/// Full error report for one method.
pub fn error_report(
    approx: &Approximation,
    exact: &ExactSolution,
    bvp: &TwoPointBVP,
    grid: &Grid,
    variant: NormVariant,
) -> Result<ErrorReport> {
    let l2 = l2_error(approx, exact, grid, variant)?;
    let max = max_error(approx, exact, grid)?;
    let (ra, rb) = boundary_residual(approx, bvp);
    Ok(ErrorReport {
        epsilon: bvp.epsilon,
        method: approx.kind(),
        l2,
        max,
        boundary_residual_a: ra,
        boundary_residual_b: rb,
        variant,
        grid_n: grid.n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::Benchmark;
    use crate::exact::exact_solution;

    #[test]
    fn grid_endpoints_are_exact() {
        let g = Grid::new(0.25, 1.75, 7).unwrap();
        assert_eq!(g.point(0), 0.25);
        assert_eq!(g.point(6), 1.75);
        let pts: Vec<f64> = g.points().collect();
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn grid_rejects_degenerate_input() {
        assert!(Grid::new(0.0, 1.0, 1).is_err());
        assert!(Grid::new(1.0, 0.0, 11).is_err());
    }

    #[test]
    fn identical_solutions_have_zero_error() {
        let bvp = Benchmark::Illustrative.bvp(0.1).unwrap();
        let exact = exact_solution(&bvp).unwrap();
        let approx = Approximation::Exact(exact.clone());
        let grid = Grid::for_problem(&bvp, 101).unwrap();
        for variant in [NormVariant::Rss, NormVariant::HWeighted, NormVariant::Rms] {
            assert_eq!(l2_error(&approx, &exact, &grid, variant).unwrap(), 0.0);
        }
        assert_eq!(max_error(&approx, &exact, &grid).unwrap(), 0.0);
    }

    #[test]
    fn constant_unit_error_has_rss_sqrt_n() {
        // approximate exact+1 by shifting beta? easier: compare two
        // synthetic evaluations via the raw formulas
        let bvp = Benchmark::Example1.bvp(0.5).unwrap();
        let exact = exact_solution(&bvp).unwrap();
        let grid = Grid::for_problem(&bvp, 101).unwrap();
        // shift the exact solution by 1 through a wrapper problem:
        // error vector is identically 1
        let shifted = {
            let mut b2 = bvp.clone();
            b2.alpha += 1.0;
            b2.beta += 1.0;
            // r must shift by q·1 for the same operator: q = 0 here
            exact_solution(&b2).unwrap()
        };
        let approx = Approximation::Exact(shifted);
        let rss = l2_error(&approx, &exact, &grid, NormVariant::Rss).unwrap();
        assert!((rss - 101.0f64.sqrt()).abs() < 1e-9, "rss = {rss}");
        let rms = l2_error(&approx, &exact, &grid, NormVariant::Rms).unwrap();
        assert!((rms - 1.0).abs() < 1e-10);
        let hw = l2_error(&approx, &exact, &grid, NormVariant::HWeighted).unwrap();
        assert!((hw - (1.0f64 / 100.0).sqrt() * 101.0f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn mmae_max_error_bounded_below_by_boundary_tail() {
        let eps = 0.1;
        let bvp = Benchmark::Illustrative.bvp(eps).unwrap();
        let exact = exact_solution(&bvp).unwrap();
        let mmae = Approximation::build(&bvp, MethodKind::Mmae).unwrap();
        let grid = Grid::for_problem(&bvp, 101).unwrap();
        let max = max_error(&mmae, &exact, &grid).unwrap();
        assert!(max >= (1.0 - 2.0 / eps).exp());
    }

    #[test]
    fn boundary_residuals_by_method() {
        let eps = 0.6;
        let bvp = Benchmark::Illustrative.bvp(eps).unwrap();
        let scem = Approximation::build(&bvp, MethodKind::ScemBalanced).unwrap();
        let (ra, rb) = boundary_residual(&scem, &bvp);
        assert!(ra <= 1e-12 && rb <= 1e-12);
        let exact = Approximation::build(&bvp, MethodKind::Exact).unwrap();
        let (ra, rb) = boundary_residual(&exact, &bvp);
        assert!(ra <= 1e-12 && rb <= 1e-12);
        let mmae = Approximation::build(&bvp, MethodKind::Mmae).unwrap();
        let (_, rb) = boundary_residual(&mmae, &bvp);
        assert!((rb - (1.0 - 2.0 / eps).exp()).abs() <= 1e-13);
    }

    #[test]
    fn hweighted_converges_to_continuous_norm() {
        // fixed smooth error profile: compare MMAE vs exact at moderate ε,
        // H-weighted norms along doubling N must stabilize monotonically
        let bvp = Benchmark::Illustrative.bvp(0.3).unwrap();
        let exact = exact_solution(&bvp).unwrap();
        let mmae = Approximation::build(&bvp, MethodKind::Mmae).unwrap();
        let mut values = Vec::new();
        for n in [101, 201, 401, 801, 1601] {
            let grid = Grid::for_problem(&bvp, n).unwrap();
            values.push(l2_error(&mmae, &exact, &grid, NormVariant::HWeighted).unwrap());
        }
        // limit estimate from the finest grid; deviations must shrink
        let limit = *values.last().unwrap();
        let devs: Vec<f64> = values.iter().map(|v| (v - limit).abs()).collect();
        for i in 0..devs.len() - 2 {
            assert!(
                devs[i + 1] < devs[i],
                "H-weighted norm not converging: {values:?}"
            );
        }
    }
}
