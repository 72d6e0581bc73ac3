//! Closed-form building blocks for constant-coefficient linear
//! second-order operators `L = a2 D² + a1 D + a0`.
//!
//! Shared by the exact-solution oracle (operator in x) and the full SCEM
//! complementary solve (operator in the stretched variable). Everything
//! here is evaluated from closed forms; the only numerical concerns are
//! cancellation in the root formulas and exponential overflow, both
//! handled structurally:
//!
//! - the smaller-magnitude root is computed from the rationalized
//!   numerator, never by subtracting nearly equal quantities;
//! - each homogeneous basis function is anchored at the endpoint where its
//!   exponential is largest, so only decaying exponentials are ever
//!   evaluated (large negative arguments underflow to 0 silently, which
//!   is the mathematically correct limit).

use crate::error::Error;
use crate::Result;

/// Characteristic roots of `a2 μ² + a1 μ + a0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootPair {
    /// Two distinct real roots; `plus` carries the `+√disc` branch.
    RealDistinct {
        /// Root from the `+√disc` branch.
        plus: f64,
        /// Root from the `−√disc` branch.
        minus: f64,
    },
    /// Double real root (discriminant within roundoff of zero).
    RealDouble {
        /// The repeated root.
        root: f64,
    },
    /// Complex-conjugate pair σ ± iω with ω > 0.
    ComplexPair {
        /// Real part.
        sigma: f64,
        /// Imaginary part, positive.
        omega: f64,
    },
}

/// Cancellation-safe quadratic roots.
///
/// The discriminant counts as zero when `|disc| ≤ 1e−12·max(a1², |4·a2·a0|)`.
pub fn quadratic_roots(a2: f64, a1: f64, a0: f64) -> RootPair {
    debug_assert!(a2 != 0.0, "leading coefficient must be nonzero");
    let disc = a1 * a1 - 4.0 * a2 * a0;
    let scale = (a1 * a1).max((4.0 * a2 * a0).abs());
    if disc.abs() <= 1e-12 * scale {
        return RootPair::RealDouble {
            root: -a1 / (2.0 * a2),
        };
    }
    if disc > 0.0 {
        let s = disc.sqrt();
        if a1 >= 0.0 {
            RootPair::RealDistinct {
                plus: -2.0 * a0 / (a1 + s),
                minus: (-a1 - s) / (2.0 * a2),
            }
        } else {
            RootPair::RealDistinct {
                plus: (-a1 + s) / (2.0 * a2),
                minus: 2.0 * a0 / (s - a1),
            }
        }
    } else {
        RootPair::ComplexPair {
            sigma: -a1 / (2.0 * a2),
            omega: (-disc).sqrt() / (2.0 * a2.abs()),
        }
    }
}

/// Pair of homogeneous solutions of `L y = 0`, each anchored so that its
/// exponential argument is ≤ 0 over the working interval `[ta, tb]`.
#[derive(Debug, Clone, Copy)]
pub enum HomogeneousBasis {
    /// {e^{μ1(t−ref1)}, e^{μ2(t−ref2)}}
    RealDistinct {
        mu1: f64,
        ref1: f64,
        mu2: f64,
        ref2: f64,
    },
    /// {e^{μ(t−ref)}, (t−ref)·e^{μ(t−ref)}}
    RealDouble { mu: f64, anchor: f64 },
    /// {e^{σΔ}cos(ωΔ), e^{σΔ}sin(ωΔ)}, Δ = t − ref
    ComplexPair { sigma: f64, omega: f64, anchor: f64 },
}

impl HomogeneousBasis {
    /// Anchors each basis function: a root with positive real part is
    /// referenced to `tb`, otherwise to `ta`.
    pub fn from_roots(roots: RootPair, ta: f64, tb: f64) -> Self {
        let anchor_for = |re: f64| if re > 0.0 { tb } else { ta };
        match roots {
            RootPair::RealDistinct { plus, minus } => HomogeneousBasis::RealDistinct {
                mu1: plus,
                ref1: anchor_for(plus),
                mu2: minus,
                ref2: anchor_for(minus),
            },
            RootPair::RealDouble { root } => HomogeneousBasis::RealDouble {
                mu: root,
                anchor: anchor_for(root),
            },
            RootPair::ComplexPair { sigma, omega } => HomogeneousBasis::ComplexPair {
                sigma,
                omega,
                anchor: anchor_for(sigma),
            },
        }
    }

    /// Value of basis function `i ∈ {0, 1}` at `t`.
    pub fn value(&self, i: usize, t: f64) -> f64 {
        match *self {
            HomogeneousBasis::RealDistinct { mu1, ref1, mu2, ref2 } => {
                if i == 0 {
                    (mu1 * (t - ref1)).exp()
                } else {
                    (mu2 * (t - ref2)).exp()
                }
            }
            HomogeneousBasis::RealDouble { mu, anchor } => {
                let d = t - anchor;
                let e = (mu * d).exp();
                if i == 0 {
                    e
                } else {
                    d * e
                }
            }
            HomogeneousBasis::ComplexPair { sigma, omega, anchor } => {
                let d = t - anchor;
                let e = (sigma * d).exp();
                if i == 0 {
                    e * (omega * d).cos()
                } else {
                    e * (omega * d).sin()
                }
            }
        }
    }

    /// First derivative of basis function `i` at `t`.
    pub fn d1(&self, i: usize, t: f64) -> f64 {
        match *self {
            HomogeneousBasis::RealDistinct { mu1, ref1, mu2, ref2 } => {
                if i == 0 {
                    mu1 * (mu1 * (t - ref1)).exp()
                } else {
                    mu2 * (mu2 * (t - ref2)).exp()
                }
            }
            HomogeneousBasis::RealDouble { mu, anchor } => {
                let d = t - anchor;
                let e = (mu * d).exp();
                if i == 0 {
                    mu * e
                } else {
                    (1.0 + mu * d) * e
                }
            }
            HomogeneousBasis::ComplexPair { sigma, omega, anchor } => {
                let d = t - anchor;
                let e = (sigma * d).exp();
                let (s, c) = (omega * d).sin_cos();
                if i == 0 {
                    e * (sigma * c - omega * s)
                } else {
                    e * (sigma * s + omega * c)
                }
            }
        }
    }

    /// Second derivative of basis function `i` at `t`.
    pub fn d2(&self, i: usize, t: f64) -> f64 {
        match *self {
            HomogeneousBasis::RealDistinct { mu1, ref1, mu2, ref2 } => {
                if i == 0 {
                    mu1 * mu1 * (mu1 * (t - ref1)).exp()
                } else {
                    mu2 * mu2 * (mu2 * (t - ref2)).exp()
                }
            }
            HomogeneousBasis::RealDouble { mu, anchor } => {
                let d = t - anchor;
                let e = (mu * d).exp();
                if i == 0 {
                    mu * mu * e
                } else {
                    mu * (2.0 + mu * d) * e
                }
            }
            HomogeneousBasis::ComplexPair { sigma, omega, anchor } => {
                let d = t - anchor;
                let e = (sigma * d).exp();
                let (s, c) = (omega * d).sin_cos();
                let re = sigma * sigma - omega * omega;
                let im = 2.0 * sigma * omega;
                if i == 0 {
                    e * (re * c - im * s)
                } else {
                    e * (re * s + im * c)
                }
            }
        }
    }
}

/// One particular-solution term `coef · t^pow · e^{rate·t}`.
///
/// Covers polynomial terms (`rate = 0`), exponentials (`pow = 0`) and the
/// resonance-bumped products of both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForcingTerm {
    pub coef: f64,
    pub pow: u32,
    pub rate: f64,
}

impl ForcingTerm {
    pub fn value(&self, t: f64) -> f64 {
        self.coef * t.powi(self.pow as i32) * (self.rate * t).exp()
    }

    pub fn d1(&self, t: f64) -> f64 {
        let m = self.pow;
        let poly = if m > 0 {
            m as f64 * t.powi(m as i32 - 1) + self.rate * t.powi(m as i32)
        } else {
            self.rate
        };
        self.coef * poly * (self.rate * t).exp()
    }

    pub fn d2(&self, t: f64) -> f64 {
        let m = self.pow as i32;
        let r = self.rate;
        let mut poly = r * r * t.powi(m);
        if m >= 1 {
            poly += 2.0 * r * m as f64 * t.powi(m - 1);
        }
        if m >= 2 {
            poly += (m * (m - 1)) as f64 * t.powi(m - 2);
        }
        self.coef * poly * (r * t).exp()
    }
}

/// Evaluates a sum of particular terms.
pub fn terms_value(terms: &[ForcingTerm], t: f64) -> f64 {
    terms.iter().map(|f| f.value(t)).sum()
}

/// First derivative of a sum of particular terms.
pub fn terms_d1(terms: &[ForcingTerm], t: f64) -> f64 {
    terms.iter().map(|f| f.d1(t)).sum()
}

/// Second derivative of a sum of particular terms.
pub fn terms_d2(terms: &[ForcingTerm], t: f64) -> f64 {
    terms.iter().map(|f| f.d2(t)).sum()
}

/// Relative threshold below which the characteristic polynomial value is
/// treated as resonant (exactly zero up to roundoff).
const RESONANCE_RTOL: f64 = 1e-9;

/// Particular solution of `a2 ψ″ + a1 ψ′ + a0 ψ = c·e^{s t}` by
/// undetermined coefficients, with resonance bumps `t·e^{st}` and
/// `t²·e^{st}` when `s` hits a simple or double characteristic root.
pub fn particular_exponential(a2: f64, a1: f64, a0: f64, c: f64, s: f64) -> ForcingTerm {
    let chi = a2 * s * s + a1 * s + a0;
    let scale = (a2 * s * s).abs().max((a1 * s).abs()).max(a0.abs());
    if chi.abs() > RESONANCE_RTOL * scale && chi != 0.0 {
        return ForcingTerm {
            coef: c / chi,
            pow: 0,
            rate: s,
        };
    }
    let chi_d = 2.0 * a2 * s + a1;
    let scale_d = (2.0 * a2 * s).abs().max(a1.abs());
    if chi_d.abs() > RESONANCE_RTOL * scale_d && chi_d != 0.0 {
        // L[t e^{st}] = (χ(s)·t + χ′(s)) e^{st}; χ(s) ≈ 0
        ForcingTerm {
            coef: c / chi_d,
            pow: 1,
            rate: s,
        }
    } else {
        // double-root resonance: L[t² e^{st}] = 2·a2·e^{st} at χ = χ′ = 0
        ForcingTerm {
            coef: c / (2.0 * a2),
            pow: 2,
            rate: s,
        }
    }
}

/// Particular solution of `a2 ψ″ + a1 ψ′ + a0 ψ = Σ rhs[i]·tⁱ` by
/// undetermined coefficients.
///
/// For `a0 ≠ 0` the ansatz has matching degree and solves triangularly
/// from the top coefficient down. For `a0 = 0` (resonance at the zero
/// root) the ansatz is `t`·(polynomial of matching degree); `a1` must be
/// nonzero then, which holds for every end-layer problem.
pub fn particular_polynomial(a2: f64, a1: f64, a0: f64, rhs: &[f64]) -> Vec<ForcingTerm> {
    let d = rhs.len() - 1;
    if a0 != 0.0 {
        let mut coeffs = vec![0.0; d + 1];
        for i in (0..=d).rev() {
            let mut v = rhs[i];
            if i + 1 <= d {
                v -= a1 * (i as f64 + 1.0) * coeffs[i + 1];
            }
            if i + 2 <= d {
                v -= a2 * ((i + 2) * (i + 1)) as f64 * coeffs[i + 2];
            }
            coeffs[i] = v / a0;
        }
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, coef)| ForcingTerm {
                coef,
                pow: i as u32,
                rate: 0.0,
            })
            .collect()
    } else {
        debug_assert!(a1 != 0.0, "operator must have a first-order term");
        // ansatz Σ_{i=1}^{d+1} aᵢ tⁱ: match a1·i·aᵢ + a2·(i+1)·i·aᵢ₊₁ = rhs[i−1]
        let mut coeffs = vec![0.0; d + 2];
        for j in (0..=d).rev() {
            let mut v = rhs[j];
            if j + 2 <= d + 1 {
                v -= a2 * ((j + 2) * (j + 1)) as f64 * coeffs[j + 2];
            }
            coeffs[j + 1] = v / (a1 * (j as f64 + 1.0));
        }
        coeffs
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(i, coef)| ForcingTerm {
                coef,
                pow: i as u32,
                rate: 0.0,
            })
            .collect()
    }
}

/// Fits `c1·φ0 + c2·φ1 + particular` to the two-point values
/// `g(ta) = ga`, `g(tb) = gb` by direct elimination, larger pivot first.
pub fn fit_two_point(
    basis: &HomogeneousBasis,
    particular: &[ForcingTerm],
    ta: f64,
    ga: f64,
    tb: f64,
    gb: f64,
) -> Result<(f64, f64)> {
    let a11 = basis.value(0, ta);
    let a12 = basis.value(1, ta);
    let a21 = basis.value(0, tb);
    let a22 = basis.value(1, tb);
    let b1 = ga - terms_value(particular, ta);
    let b2 = gb - terms_value(particular, tb);
    let det = a11 * a22 - a12 * a21;
    if det.abs() < 1e-300 {
        return Err(Error::SingularBoundarySystem { det });
    }
    // eliminate with the larger leading pivot first
    let (c1, c2) = if a11.abs() >= a21.abs() {
        let c2 = (a11 * b2 - a21 * b1) / det;
        let c1 = (b1 - a12 * c2) / a11;
        (c1, c2)
    } else {
        let c2 = (a11 * b2 - a21 * b1) / det;
        let c1 = (b2 - a22 * c2) / a21;
        (c1, c2)
    };
    Ok((c1, c2))
}
