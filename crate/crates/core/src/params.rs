//! Class parameters `(A, B, β, p)` and the per-coefficient case split.
//!
//! A function `f(z) = z^p + a_{p+1} z^{p+1} + ...` belongs to the class when
//! `z f'(z) / f(z)` is subordinate to the Möbius map
//!
//! ```text
//! w(z) = (p + M z) / (1 + B z),    M = pB + (A - B)(p - β)
//! ```
//!
//! with `-1 <= B < A <= 1` and `0 <= β < 1`.
//!
//! Coefficient estimates hinge on the signed summands
//!
//! ```text
//! W_k = X_k^2 - (k - 1)^2,    X_k = A(p - β) - B(k + p - β - 1),    k >= 2
//! ```
//!
//! and on the sign of `g(k) = X_k - (k - 1)`, which is non-increasing in `k`.
//! Since `X_k + (k - 1) > 0` for every admissible parameter set, `W_k` always
//! has the sign of `g(k)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Values of `|B|` below this are snapped to zero on construction.
pub const B_ZERO_SNAP: f64 = 1e-14;

/// Validated `(A, B, β, p)` with the derived constants `M` and `c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassParams {
    a: f64,
    b: f64,
    beta: f64,
    p: u32,
    m: f64,
    c: f64,
}

/// Which regime a coefficient index `n >= p + 1` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    /// `n = p + 1`.
    FirstCoefficient,
    /// `A(p-β) - B(p-β+1) <= 1`: every summand `W_k` is non-positive.
    NonPositiveTerms,
    /// `A(p-β) - B(n-β-1) > n-p-1`: `W_k > 0` for all `2 <= k <= n-p`.
    PositiveTerms,
    /// Neither: `W_2 > 0` but `W_{n-p} <= 0`.
    MixedTerms,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::FirstCoefficient => "FirstCoefficient",
            CaseLabel::NonPositiveTerms => "NonPositiveTerms",
            CaseLabel::PositiveTerms => "PositiveTerms",
            CaseLabel::MixedTerms => "MixedTerms",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl ClassParams {
    /// Validates `-1 <= B < A <= 1`, `0 <= β < 1` and `p >= 1`.
    pub fn new(a: f64, b: f64, beta: f64, p: u32) -> Result<Self> {
        let invalid = |reason: &str| Err(Error::InvalidParameters(reason.to_owned()));
        if !(a.is_finite() && b.is_finite() && beta.is_finite()) {
            return invalid("A, B and beta must be finite");
        }
        let b = if b.abs() < B_ZERO_SNAP { 0.0 } else { b };
        if p < 1 {
            return invalid("p must be at least 1");
        }
        if b < -1.0 {
            return invalid("B must be at least -1");
        }
        if a > 1.0 {
            return invalid("A must be at most 1");
        }
        if b >= a {
            return invalid("B must be strictly less than A");
        }
        if !(0.0..1.0).contains(&beta) {
            return invalid("beta must lie in [0, 1)");
        }
        let span = p as f64 - beta;
        let c = (a - b) * span;
        Ok(Self {
            a,
            b,
            beta,
            p,
            m: p as f64 * b + c,
            c,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Numerator constant `pB + (A-B)(p-β)` of the target Möbius map.
    pub fn m(&self) -> f64 {
        self.m
    }

    /// `(A-B)(p-β)`, the sharp bound on `|a_{p+1}|`.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// `p - β`.
    pub fn span(&self) -> f64 {
        self.p as f64 - self.beta
    }

    /// `X_k = A(p-β) - B(k+p-β-1)`. `X_1 = c`, and `X_{k+1}` multiplies
    /// `a_{p+k}` in the recurrence driven by the Schwarz function.
    pub fn x_factor(&self, k: u32) -> f64 {
        let span = self.span();
        self.a * span - self.b * ((k as f64 - 1.0) + span)
    }

    /// `g(k) = X_k - (k-1)`; the sign of `W_k`.
    pub fn case_margin(&self, k: u32) -> f64 {
        self.x_factor(k) - (k as f64 - 1.0)
    }

    /// Case-3 inequality at `n`: `A(p-β) - B(n-β-1) > n-p-1`.
    pub fn positive_terms_condition(&self, n: u32) -> bool {
        self.case_margin(n - self.p) > 0.0
    }

    /// One-shot case-2 hypothesis `A(p-β) - B(p-β+1) <= 1`, i.e. `g(2) <= 0`.
    pub fn one_shot_condition(&self) -> bool {
        self.case_margin(2) <= 0.0
    }

    /// The one-shot hypothesis with `B(p-β-1)` as it appears in the printed
    /// theorem statement. Kept for comparison only.
    pub fn printed_one_shot_condition(&self) -> bool {
        let span = self.span();
        self.a * span - self.b * (span - 1.0) <= 1.0
    }

    /// Per-index form `A(p-β) - B(n-β-1) <= n-p-1` of the case-2 hypothesis.
    /// It is implied by [`Self::one_shot_condition`] but not conversely.
    pub fn per_n_condition(&self, n: u32) -> bool {
        !self.positive_terms_condition(n)
    }

    pub fn check_index(&self, n: u32) -> Result<()> {
        if n < self.p + 1 {
            return Err(Error::IndexBelowRange {
                n,
                first: self.p + 1,
            });
        }
        Ok(())
    }

    /// Case label for coefficient index `n >= p + 1`.
    pub fn classify_case(&self, n: u32) -> Result<CaseLabel> {
        self.check_index(n)?;
        Ok(if n == self.p + 1 {
            CaseLabel::FirstCoefficient
        } else if self.positive_terms_condition(n) {
            CaseLabel::PositiveTerms
        } else if self.one_shot_condition() {
            CaseLabel::NonPositiveTerms
        } else {
            CaseLabel::MixedTerms
        })
    }

    /// Signed summand `W_k = X_k^2 - (k-1)^2` for `k >= 2`.
    ///
    /// Evaluated in factored form so its sign agrees exactly with
    /// [`Self::case_margin`].
    pub fn summand_w(&self, k: u32) -> Result<f64> {
        if k < 2 {
            return Err(Error::PreconditionViolated(format!("summand index k = {k} must be at least 2")));
        }
        let x = self.x_factor(k);
        let km1 = k as f64 - 1.0;
        Ok((x - km1) * (x + km1))
    }
}
