//! Symbolic scalar coefficient functions.
//!
//! The coefficient functions p, q, r of a problem (and every closed form
//! derived from them) are kept symbolic so that reduced equations,
//! derivatives and particular solutions are exact — no finite differences
//! anywhere in the crate.

/// A closed-form scalar function of one variable.
///
/// The class is deliberately small: constants, polynomials, exponentials
/// `c·e^{kx}` and finite sums of those. It is closed under exact
/// differentiation.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefExpr {
    /// The constant function `c`.
    Constant(f64),
    /// Polynomial with ascending coefficients: `coeffs[i]` multiplies `x^i`.
    /// Nonempty; trailing zeros trimmed (the zero polynomial is `[0.0]`).
    Polynomial(Vec<f64>),
    /// `c · e^{k·x}`.
    ExpLinear {
        /// Amplitude.
        c: f64,
        /// Exponential rate.
        k: f64,
    },
    /// Sum of sub-expressions.
    Sum(Vec<CoefExpr>),
}

impl CoefExpr {
    /// Polynomial constructor that enforces the trailing-zero invariant.
    pub fn poly(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        CoefExpr::Polynomial(coeffs)
    }

    /// Evaluate at `x`.
    pub fn evaluate(&self, x: f64) -> f64 {
        match self {
            CoefExpr::Constant(c) => *c,
            CoefExpr::Polynomial(coeffs) => {
                // Horner, highest degree first.
                coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
            }
            CoefExpr::ExpLinear { c, k } => c * (k * x).exp(),
            CoefExpr::Sum(parts) => parts.iter().map(|p| p.evaluate(x)).sum(),
        }
    }

    /// Exact derivative.
    pub fn differentiate(&self) -> CoefExpr {
        match self {
            CoefExpr::Constant(_) => CoefExpr::Constant(0.0),
            CoefExpr::Polynomial(coeffs) => {
                if coeffs.len() <= 1 {
                    CoefExpr::Constant(0.0)
                } else {
                    CoefExpr::poly(
                        coeffs
                            .iter()
                            .enumerate()
                            .skip(1)
                            .map(|(i, &c)| i as f64 * c)
                            .collect(),
                    )
                }
            }
            CoefExpr::ExpLinear { c, k } => CoefExpr::ExpLinear { c: c * k, k: *k },
            CoefExpr::Sum(parts) => CoefExpr::Sum(parts.iter().map(|p| p.differentiate()).collect()),
        }
    }

    /// Negation (used when normalizing a `−ε y″` problem).
    pub fn negate(&self) -> CoefExpr {
        match self {
            CoefExpr::Constant(c) => CoefExpr::Constant(-c),
            CoefExpr::Polynomial(coeffs) => {
                CoefExpr::Polynomial(coeffs.iter().map(|c| -c).collect())
            }
            CoefExpr::ExpLinear { c, k } => CoefExpr::ExpLinear { c: -c, k: *k },
            CoefExpr::Sum(parts) => CoefExpr::Sum(parts.iter().map(|p| p.negate()).collect()),
        }
    }

    /// Returns `Some(c)` when the expression is the constant `c`
    /// (including degree-0 polynomials, rate-0 exponentials and sums of
    /// constants).
    pub fn constant_value(&self) -> Option<f64> {
        match self {
            CoefExpr::Constant(c) => Some(*c),
            CoefExpr::Polynomial(coeffs) if coeffs.len() == 1 => Some(coeffs[0]),
            CoefExpr::ExpLinear { c, k } if *k == 0.0 => Some(*c),
            CoefExpr::ExpLinear { c, .. } if *c == 0.0 => Some(0.0),
            CoefExpr::Sum(parts) => parts.iter().map(|p| p.constant_value()).sum(),
            _ => None,
        }
    }

    /// Ascending polynomial coefficients, when the expression is a
    /// polynomial (constants count; exponentials only with `c = 0`).
    pub fn polynomial_coeffs(&self) -> Option<Vec<f64>> {
        match self {
            CoefExpr::Constant(c) => Some(vec![*c]),
            CoefExpr::Polynomial(coeffs) => Some(coeffs.clone()),
            CoefExpr::ExpLinear { c, k } if *k == 0.0 => Some(vec![*c]),
            CoefExpr::ExpLinear { c, .. } if *c == 0.0 => Some(vec![0.0]),
            CoefExpr::Sum(parts) => {
                let mut acc = vec![0.0];
                for part in parts {
                    let p = part.polynomial_coeffs()?;
                    if p.len() > acc.len() {
                        acc.resize(p.len(), 0.0);
                    }
                    for (a, b) in acc.iter_mut().zip(p.iter()) {
                        *a += b;
                    }
                }
                Some(acc)
            }
            _ => None,
        }
    }

    /// Splits the expression into a polynomial part (ascending coefficients,
    /// possibly all zero) and a list of genuine exponential terms `(c, k)`
    /// with `c ≠ 0`, `k ≠ 0`. Returns `None` if the expression is outside
    /// the polynomial + exponential class.
    pub fn split_poly_exp(&self) -> Option<(Vec<f64>, Vec<(f64, f64)>)> {
        let mut poly = vec![0.0];
        let mut exps: Vec<(f64, f64)> = Vec::new();
        self.collect_terms(&mut poly, &mut exps)?;
        Some((poly, exps))
    }

    fn collect_terms(&self, poly: &mut Vec<f64>, exps: &mut Vec<(f64, f64)>) -> Option<()> {
        match self {
            CoefExpr::Constant(c) => {
                poly[0] += c;
                Some(())
            }
            CoefExpr::Polynomial(coeffs) => {
                if coeffs.len() > poly.len() {
                    poly.resize(coeffs.len(), 0.0);
                }
                for (a, b) in poly.iter_mut().zip(coeffs.iter()) {
                    *a += b;
                }
                Some(())
            }
            CoefExpr::ExpLinear { c, k } => {
                if *c == 0.0 {
                    return Some(());
                }
                if *k == 0.0 {
                    poly[0] += c;
                    return Some(());
                }
                // merge terms with identical rates
                if let Some(term) = exps.iter_mut().find(|(_, rate)| rate == k) {
                    term.0 += c;
                } else {
                    exps.push((*c, *k));
                }
                Some(())
            }
            CoefExpr::Sum(parts) => {
                for part in parts {
                    part.collect_terms(poly, exps)?;
                }
                Some(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_trims_trailing_zeros() {
        assert_eq!(
            CoefExpr::poly(vec![1.0, 2.0, 0.0, 0.0]),
            CoefExpr::Polynomial(vec![1.0, 2.0])
        );
        assert_eq!(CoefExpr::poly(vec![0.0, 0.0]), CoefExpr::Polynomial(vec![0.0]));
        assert_eq!(CoefExpr::poly(vec![]), CoefExpr::Polynomial(vec![0.0]));
    }

    #[test]
    fn polynomial_derivative_drops_degree() {
        // d/dx (1 + 2x + 3x^2) = 2 + 6x
        let p = CoefExpr::poly(vec![1.0, 2.0, 3.0]);
        assert_eq!(p.differentiate(), CoefExpr::Polynomial(vec![2.0, 6.0]));
        assert_eq!(
            CoefExpr::poly(vec![5.0]).differentiate(),
            CoefExpr::Constant(0.0)
        );
    }

    #[test]
    fn exp_linear_derivative_is_exact() {
        // d/dx 3 e^{-2x} = -6 e^{-2x}
        let e = CoefExpr::ExpLinear { c: 3.0, k: -2.0 };
        assert_eq!(e.differentiate(), CoefExpr::ExpLinear { c: -6.0, k: -2.0 });
    }

    #[test]
    fn evaluate_matches_hand_values() {
        let p = CoefExpr::poly(vec![-1.0, 1.0, 1.0]); // x^2 + x - 1
        assert_eq!(p.evaluate(0.0), -1.0);
        assert_eq!(p.evaluate(1.0), 1.0);
        let e = CoefExpr::ExpLinear {
            c: std::f64::consts::E,
            k: -1.0,
        }; // e^{1-x}
        assert!((e.evaluate(1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constant_detection_sees_through_sums() {
        let s = CoefExpr::Sum(vec![
            CoefExpr::Constant(1.0),
            CoefExpr::Polynomial(vec![2.0]),
            CoefExpr::ExpLinear { c: 3.0, k: 0.0 },
        ]);
        assert_eq!(s.constant_value(), Some(6.0));
        assert_eq!(
            CoefExpr::ExpLinear { c: 1.0, k: 1.0 }.constant_value(),
            None
        );
    }

    #[test]
    fn split_poly_exp_merges_rates() {
        let s = CoefExpr::Sum(vec![
            CoefExpr::poly(vec![1.0, 2.0]),
            CoefExpr::ExpLinear { c: 2.0, k: -1.0 },
            CoefExpr::ExpLinear { c: 3.0, k: -1.0 },
        ]);
        let (poly, exps) = s.split_poly_exp().unwrap();
        assert_eq!(poly, vec![1.0, 2.0]);
        assert_eq!(exps, vec![(5.0, -1.0)]);
    }
}
