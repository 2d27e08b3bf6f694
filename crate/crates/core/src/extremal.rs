//! The two extremal families and attainment checks.
//!
//! * Global: `z^p (1 + Bδz)^{c/B}`, or `z^p e^{cδz}` when `B = 0`. Driven by
//!   `φ = δz`; extremal for the first coefficient and the positive regime.
//! * Per-index: `z^p (1 + Bδz^s)^{c/(sB)}` with `s = n - p`, or
//!   `z^p exp(cδz^s / s)` when `B = 0`. Driven by `φ = δz^s`; its first
//!   nontrivial coefficient is `cδ/s` at `z^n`, extremal in the
//!   non-positive regime.
//!
//! The per-index family is sometimes written with `z^{n-1}` and exponent
//! `c/((n-1)B)`. That agrees with the form above only for `p = 1`; for
//! `p > 1` it lands its first coefficient at `z^{p+n-1}`.
//! [`expand_per_n_as_printed`] keeps that variant for comparison.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_report, BoundReport};
use crate::error::{Error, Result};
use crate::params::{CaseLabel, ClassParams};
use crate::series::{exp_series, pow_binomial, TruncatedSeries};
use crate::verify::{schwarz_from_function, MembershipReport, SampleGrid, SchwarzSpec, MEMBERSHIP_TOL};

/// Relative tolerance for "the extremal coefficient equals the bound".
pub const ATTAINMENT_RTOL: f64 = 1e-9;
/// Terms past `p` used when expanding an extremal function for membership.
pub const MEMBERSHIP_TERMS: usize = 320;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalFamily {
    Global,
    PerN { n: u32 },
}

impl ExtremalFamily {
    pub fn name(self) -> &'static str {
        match self {
            ExtremalFamily::Global => "global",
            ExtremalFamily::PerN { .. } => "per-n",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    params: ClassParams,
    family: ExtremalFamily,
    delta: Complex64,
}

impl ExtremalSpec {
    pub fn new(params: ClassParams, family: ExtremalFamily, delta: Complex64) -> Result<Self> {
        let off = (delta.norm() - 1.0).abs();
        if off.is_nan() || off > 1e-12 {
            return Err(Error::InvalidExtremal(format!("|δ| = {} is not 1", delta.norm())));
        }
        if let ExtremalFamily::PerN { n } = family {
            params
                .check_index(n)
                .map_err(|_| Error::InvalidExtremal(format!("per-n family needs n >= p + 1, got {n}")))?;
        }
        Ok(Self {
            params,
            family,
            delta,
        })
    }

    pub fn global(params: ClassParams) -> Self {
        Self::new(params, ExtremalFamily::Global, Complex64::new(1.0, 0.0)).unwrap()
    }

    pub fn per_n(params: ClassParams, n: u32) -> Result<Self> {
        Self::new(params, ExtremalFamily::PerN { n }, Complex64::new(1.0, 0.0))
    }

    /// Rotates to `δ = exp(2πi·turns)`.
    pub fn with_delta_turns(self, turns: f64) -> Self {
        Self {
            delta: Complex64::from_polar(1.0, std::f64::consts::TAU * turns),
            ..self
        }
    }

    pub fn params(&self) -> &ClassParams {
        &self.params
    }

    pub fn family(&self) -> ExtremalFamily {
        self.family
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }

    /// Power `s` of the driving Schwarz function `φ = δ z^s`.
    pub fn step(&self) -> usize {
        match self.family {
            ExtremalFamily::Global => 1,
            ExtremalFamily::PerN { n } => (n - self.params.p()) as usize,
        }
    }

    pub fn schwarz(&self) -> SchwarzSpec {
        SchwarzSpec::monomial(self.step(), self.delta).unwrap()
    }

    /// Expansion known below `order` (which must exceed `p`).
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        match self.family {
            ExtremalFamily::Global => expand_global(self, order),
            ExtremalFamily::PerN { .. } => expand_per_n(self, order),
        }
    }
}

/// `z^p (1 + Bδ z^step)^{c/(step·B)}` (or the exponential when `B = 0`).
fn lacunary_member(params: &ClassParams, delta: Complex64, step: usize, order: usize) -> Result<TruncatedSeries> {
    let p = params.p() as usize;
    if order <= p {
        return Err(Error::PreconditionViolated(format!("order {order} must exceed p = {p}")));
    }
    let len = order - p;
    let inner_len = (len - 1) / step + 1;
    let inner = if params.b() == 0.0 {
        exp_series(delta * params.c() / step as f64, inner_len)
    } else {
        let lambda = params.c() / (step as f64 * params.b());
        pow_binomial(delta * params.b(), Complex64::new(lambda, 0.0), inner_len)
    };
    let mut coeffs = vec![Complex64::new(0.0, 0.0); len];
    for (m, &value) in inner.coeffs().iter().enumerate() {
        coeffs[m * step] = value;
    }
    Ok(TruncatedSeries::new(p, coeffs))
}

pub fn expand_global(spec: &ExtremalSpec, order: usize) -> Result<TruncatedSeries> {
    if spec.family != ExtremalFamily::Global {
        return Err(Error::InvalidExtremal("expected the global family".into()));
    }
    lacunary_member(&spec.params, spec.delta, 1, order)
}

pub fn expand_per_n(spec: &ExtremalSpec, order: usize) -> Result<TruncatedSeries> {
    match spec.family {
        ExtremalFamily::PerN { .. } => lacunary_member(&spec.params, spec.delta, spec.step(), order),
        ExtremalFamily::Global => Err(Error::InvalidExtremal("expected the per-n family".into())),
    }
}

/// Per-index family with `z^{n-1}` and exponent `c/((n-1)B)`.
pub fn expand_per_n_as_printed(spec: &ExtremalSpec, order: usize) -> Result<TruncatedSeries> {
    match spec.family {
        ExtremalFamily::PerN { n } => lacunary_member(&spec.params, spec.delta, (n - 1) as usize, order),
        ExtremalFamily::Global => Err(Error::InvalidExtremal("expected the per-n family".into())),
    }
}

/// The family claimed extremal for `n`, if any.
pub fn witness_family(params: &ClassParams, n: u32) -> Result<Option<ExtremalFamily>> {
    Ok(match params.classify_case(n)? {
        CaseLabel::FirstCoefficient | CaseLabel::PositiveTerms => Some(ExtremalFamily::Global),
        CaseLabel::NonPositiveTerms => Some(ExtremalFamily::PerN { n }),
        CaseLabel::MixedTerms => None,
    })
}

/// `|a_n|` of the witness family with `δ = 1`, without a membership check.
pub fn witness_modulus(params: &ClassParams, n: u32) -> Result<Option<f64>> {
    let Some(family) = witness_family(params, n)? else {
        return Ok(None);
    };
    let spec = ExtremalSpec::new(*params, family, Complex64::new(1.0, 0.0))?;
    let f = spec.expand(n as usize + 1)?;
    Ok(Some(f.coeff(n as usize).unwrap().norm()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttainmentReport {
    pub family: ExtremalFamily,
    pub delta: Complex64,
    pub bound: BoundReport,
    /// `|a_n|` of the expanded extremal function.
    pub coefficient: f64,
    pub membership: MembershipReport,
    /// Coefficient equals the bound and the function passed membership.
    pub attained: bool,
    /// Index of the first nontrivial coefficient of the `z^{n-1}` variant of
    /// the per-index family.
    pub printed_first_index: Option<u32>,
    pub printed_index_mismatch: bool,
}

pub fn attainment_report(spec: &ExtremalSpec, n: u32) -> Result<AttainmentReport> {
    attainment_report_with(spec, n, &SampleGrid::default(), ATTAINMENT_RTOL)
}

/// Expands the extremal function, reads `|a_n|`, checks membership on
/// `grid` and compares against the sharp bound at relative tolerance `rtol`.
pub fn attainment_report_with(
    spec: &ExtremalSpec,
    n: u32,
    grid: &SampleGrid,
    rtol: f64,
) -> Result<AttainmentReport> {
    let params = spec.params;
    let case = params.classify_case(n)?;
    let witnesses = match (spec.family, case) {
        (_, CaseLabel::FirstCoefficient) => match spec.family {
            ExtremalFamily::Global => true,
            ExtremalFamily::PerN { n: target } => target == n,
        },
        (ExtremalFamily::Global, CaseLabel::PositiveTerms) => true,
        (ExtremalFamily::PerN { n: target }, CaseLabel::NonPositiveTerms) => target == n,
        _ => false,
    };
    if !witnesses {
        return Err(Error::CaseMismatch {
            family: spec.family.name(),
            case,
            n,
        });
    }
    let bound = bound_report(&params, n)?;
    let p = params.p() as usize;
    let f = spec.expand((p + MEMBERSHIP_TERMS).max(n as usize + 1))?;
    let coefficient = f.coeff(n as usize).unwrap().norm();
    let membership = schwarz_from_function(&f, &params, grid, MEMBERSHIP_TOL)?;
    let equal = (coefficient - bound.theorem1_bound).abs() <= rtol * bound.theorem1_bound;
    let printed_first_index = match spec.family {
        ExtremalFamily::PerN { n } => Some(params.p() + n - 1),
        ExtremalFamily::Global => None,
    };
    Ok(AttainmentReport {
        family: spec.family,
        delta: spec.delta,
        bound,
        coefficient,
        attained: equal && membership.verdict,
        printed_index_mismatch: printed_first_index.is_some_and(|i| i != n),
        printed_first_index,
        membership,
    })
}
