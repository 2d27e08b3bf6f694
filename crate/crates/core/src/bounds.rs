//! Closed-form coefficient bounds.
//!
//! * [`theorem1_bound`] is the sharp bound in the three regimes where it is
//!   proved, and falls back to the Clunie envelope in the mixed regime.
//! * [`aouf_bound`] is the older product formula, kept verbatim (absolute
//!   values included) because it overclaims outside the positive regime.
//! * [`clunie_envelope`] iterates the squared coefficient inequality, keeping
//!   only summands with `W_k > 0`. It is valid everywhere but not always sharp.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{CaseLabel, ClassParams};

/// Bounds for one coefficient index.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    pub case: CaseLabel,
    pub theorem1_bound: f64,
    pub aouf_bound: f64,
    pub envelope_bound: f64,
    /// Whether `theorem1_bound` is a proven sharp bound for this index.
    pub sharp: bool,
}

/// `∏_{j=1..len} X_j / j`, the modulus of the `z^{p+len}` coefficient of
/// the global extremal function when every factor is positive.
fn x_product(params: &ClassParams, len: u32) -> f64 {
    (1..=len).map(|j| params.x_factor(j) / j as f64).product()
}

pub fn theorem1_bound(params: &ClassParams, n: u32) -> Result<f64> {
    let case = params.classify_case(n)?;
    let len = n - params.p();
    Ok(match case {
        CaseLabel::FirstCoefficient => params.c(),
        CaseLabel::NonPositiveTerms => params.c() / len as f64,
        CaseLabel::PositiveTerms => x_product(params, len),
        CaseLabel::MixedTerms => clunie_envelope(params, n)?,
    })
}

/// `∏_{j=0..n-p-1} |(B-A)(p-β) + Bj| / (j+1)`.
pub fn aouf_bound(params: &ClassParams, n: u32) -> Result<f64> {
    params.check_index(n)?;
    let shortfall = (params.b() - params.a()) * params.span();
    Ok((0..n - params.p())
        .map(|j| (shortfall + params.b() * j as f64).abs() / (j + 1) as f64)
        .product())
}

/// Envelope `E_n` with `E_{p+1} = c` and
/// `E_n^2 = (c^2 + Σ_{k=2..n-p, W_k > 0} W_k E_{p+k-1}^2) / (n-p)^2`.
pub fn clunie_envelope(params: &ClassParams, n: u32) -> Result<f64> {
    Ok(clunie_envelope_sequence(params, n)?.last().copied().unwrap().sqrt())
}

/// Squared envelope values `E_{p+1}^2, ..., E_n^2`.
pub fn clunie_envelope_sequence(params: &ClassParams, n: u32) -> Result<Vec<f64>> {
    params.check_index(n)?;
    let len = (n - params.p()) as usize;
    let c2 = params.c() * params.c();
    let weights: Vec<f64> = (2..=len as u32)
        .map(|k| params.summand_w(k).map(|w| w.max(0.0)))
        .collect::<Result<_>>()?;
    let mut squares = Vec::with_capacity(len);
    squares.push(c2);
    for m in 2..=len {
        // weights[k-2] pairs with squares[k-2] = E_{p+k-1}^2
        let sum: f64 = weights[..m - 1]
            .iter()
            .zip(&squares)
            .map(|(w, e2)| w * e2)
            .sum();
        squares.push((c2 + sum) / (m * m) as f64);
    }
    Ok(squares)
}

/// Relative residual of the identity
///
/// ```text
/// P_K = (c^2 + Σ_{k=2..K} W_k P_{k-1}) / K^2,   P_K = ∏_{j=1..K} X_j^2 / j^2,
/// ```
///
/// with `K = m - p`, evaluated by summing the right side directly.
pub fn induction_identity_residual(params: &ClassParams, m: u32) -> Result<f64> {
    params.check_index(m)?;
    if m < params.p() + 2 || !params.positive_terms_condition(m) {
        return Err(Error::PreconditionViolated(format!(
            "m = {m} is not in the positive-terms regime"
        )));
    }
    let len = m - params.p();
    let prod_sq = |k: u32| {
        let x = x_product(params, k);
        x * x
    };
    let lhs = prod_sq(len);
    let sum: f64 = (2..=len)
        .map(|k| Ok(params.summand_w(k)? * prod_sq(k - 1)))
        .sum::<Result<f64>>()?;
    let rhs = (params.c() * params.c() + sum) / (len as f64 * len as f64);
    let scale = lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
    Ok((lhs - rhs).abs() / scale)
}

pub fn bound_report(params: &ClassParams, n: u32) -> Result<BoundReport> {
    let case = params.classify_case(n)?;
    Ok(BoundReport {
        n,
        case,
        theorem1_bound: theorem1_bound(params, n)?,
        aouf_bound: aouf_bound(params, n)?,
        envelope_bound: clunie_envelope(params, n)?,
        sharp: case != CaseLabel::MixedTerms,
    })
}
