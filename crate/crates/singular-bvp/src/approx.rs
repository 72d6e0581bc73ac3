//! A common handle over every solution candidate the crate can build.

use crate::exact::ExactSolution;
use crate::mmae::CompositeApproximation;
use crate::outer::OuterSolution;
use crate::problem::TwoPointBVP;
use crate::scem::{ComplementaryMode, ScemApproximation};
use crate::Result;

/// Which construction produced an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodKind {
    /// Reduced-equation solution with one BC.
    Outer,
    /// MMAE composite (outer + inner − common limit).
    Mmae,
    /// Balanced one-term SCEM.
    ScemBalanced,
    /// Full (unbalanced) one-term SCEM.
    ScemFull,
    /// Exact constant-coefficient solution.
    Exact,
}

impl MethodKind {
    /// Short machine name, as used in CLI flags and CSV headers.
    pub fn name(&self) -> &'static str {
        match self {
            MethodKind::Outer => "outer",
            MethodKind::Mmae => "mmae",
            MethodKind::ScemBalanced => "scem",
            MethodKind::ScemFull => "scemw",
            MethodKind::Exact => "exact",
        }
    }

    /// Inverse of [`MethodKind::name`] for the selectable methods.
    pub fn parse(name: &str) -> Option<MethodKind> {
        match name {
            "mmae" => Some(MethodKind::Mmae),
            "scem" => Some(MethodKind::ScemBalanced),
            "scemw" => Some(MethodKind::ScemFull),
            "exact" => Some(MethodKind::Exact),
            _ => None,
        }
    }
}

impl std::fmt::Display for MethodKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// An evaluable closed-form solution candidate with its kind tag.
#[derive(Debug, Clone)]
pub enum Approximation {
    /// Outer solution alone.
    Outer(OuterSolution),
    /// MMAE composite.
    Mmae(CompositeApproximation),
    /// One-term SCEM (balanced or full, per its complementary mode).
    Scem(ScemApproximation),
    /// Exact oracle.
    Exact(ExactSolution),
}

impl Approximation {
    /// Builds the requested approximation for a canonical problem.
    pub fn build(bvp: &TwoPointBVP, kind: MethodKind) -> Result<Approximation> {
        let layer = bvp.classify();
        Ok(match kind {
            MethodKind::Outer => Approximation::Outer(crate::outer::solve_reduced(bvp, &layer)?),
            MethodKind::Mmae => Approximation::Mmae(crate::mmae::build_composite(bvp, &layer)?),
            MethodKind::ScemBalanced => {
                Approximation::Scem(crate::scem::build_balanced(bvp, &layer)?)
            }
            MethodKind::ScemFull => Approximation::Scem(crate::scem::build_full(bvp, &layer)?),
            MethodKind::Exact => Approximation::Exact(crate::exact::exact_solution(bvp)?),
        })
    }

    /// Kind tag.
    pub fn kind(&self) -> MethodKind {
        match self {
            Approximation::Outer(_) => MethodKind::Outer,
            Approximation::Mmae(_) => MethodKind::Mmae,
            Approximation::Scem(s) => match s.mode() {
                ComplementaryMode::Balanced => MethodKind::ScemBalanced,
                ComplementaryMode::Full => MethodKind::ScemFull,
            },
            Approximation::Exact(_) => MethodKind::Exact,
        }
    }

    /// Evaluates the candidate at `x`.
    pub fn value(&self, x: f64) -> f64 {
        match self {
            Approximation::Outer(o) => o.value(x),
            Approximation::Mmae(m) => m.value(x),
            Approximation::Scem(s) => s.value(x),
            Approximation::Exact(e) => e.value(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::Benchmark;

    #[test]
    fn method_names_round_trip() {
        for kind in [
            MethodKind::Mmae,
            MethodKind::ScemBalanced,
            MethodKind::ScemFull,
            MethodKind::Exact,
        ] {
            assert_eq!(MethodKind::parse(kind.name()), Some(kind));
        }
        assert_eq!(MethodKind::parse("outer"), None); // not CLI-selectable
        assert_eq!(MethodKind::parse("unknown"), None);
    }

    #[test]
    fn build_dispatches_every_kind() {
        let bvp = Benchmark::Illustrative.bvp(0.1).unwrap();
        for kind in [
            MethodKind::Outer,
            MethodKind::Mmae,
            MethodKind::ScemBalanced,
            MethodKind::ScemFull,
            MethodKind::Exact,
        ] {
            let approx = Approximation::build(&bvp, kind).unwrap();
            assert_eq!(approx.kind(), kind);
            assert!(approx.value(0.5).is_finite());
        }
    }
}
