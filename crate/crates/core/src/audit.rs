//! Table of summand signs and the counterexample to the product formula.

use serde::{Deserialize, Serialize};

use crate::bounds::{aouf_bound, theorem1_bound};
use crate::error::{Error, Result};
use crate::extremal::{ExtremalSpec, MEMBERSHIP_TERMS};
use crate::params::{CaseLabel, ClassParams};
use crate::verify::{schwarz_from_function, MembershipReport, SampleGrid, MEMBERSHIP_TOL};

/// One row of the summand table: `W` evaluated at `(k, p, A, B, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditRow {
    pub k: u32,
    pub p: u32,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub beta: f64,
    #[serde(rename = "W")]
    pub w: f64,
}

/// `(k, p, A, B, β, published W)`.
pub const TABLE1: [(u32, u32, f64, f64, f64, f64); 4] = [
    (2, 1, 0.8, 0.5, 0.0, -0.96),
    (2, 1, -0.5, -0.8, 0.0, 0.21),
    (3, 2, 0.5, 0.4, 0.5, -3.5775),
    (3, 2, -0.1, -0.7, 0.5, 1.29),
];

/// Absolute tolerance against the published `W` values.
pub const TABLE1_TOL: f64 = 1e-12;

pub fn reproduce_table1() -> Vec<AuditRow> {
    TABLE1
        .iter()
        .map(|&(k, p, a, b, beta, _)| {
            let params = ClassParams::new(a, b, beta, p).expect("table parameters are admissible");
            AuditRow {
                k,
                p,
                a,
                b,
                beta,
                w: params.summand_w(k).expect("k >= 2"),
            }
        })
        .collect()
}

/// Largest deviation of [`reproduce_table1`] from the published values.
pub fn table1_max_deviation() -> f64 {
    reproduce_table1()
        .iter()
        .zip(TABLE1)
        .map(|(row, (.., published))| (row.w - published).abs())
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FalsificationReport {
    pub params: ClassParams,
    pub n: u32,
    pub case: CaseLabel,
    pub aouf_bound: f64,
    pub theorem1_bound: f64,
    /// `|a_n|` of the per-index extremal member.
    pub member_coefficient: f64,
    pub membership: MembershipReport,
    /// The member beats the product formula and passed membership.
    pub violated: bool,
}

impl FalsificationReport {
    pub fn verdict(&self) -> String {
        if self.violated {
            format!(
                "Theorem A violated: {} > {}",
                short(self.member_coefficient),
                short(self.aouf_bound)
            )
        } else {
            format!(
                "Theorem A not violated: {} <= {}",
                short(self.member_coefficient),
                short(self.aouf_bound)
            )
        }
    }
}

/// Up to twelve decimals, trailing zeros dropped.
fn short(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_owned()
}

/// Builds the per-index extremal member for `n`, certifies membership on
/// the default grid, and compares its `|a_n|` with the product formula.
pub fn aouf_falsification_report(params: &ClassParams, n: u32) -> Result<FalsificationReport> {
    let case = params.classify_case(n)?;
    if matches!(case, CaseLabel::FirstCoefficient | CaseLabel::PositiveTerms) {
        return Err(Error::NotAFalsificationRegime { n, case });
    }
    let spec = ExtremalSpec::per_n(*params, n)?;
    let f = spec.expand(params.p() as usize + MEMBERSHIP_TERMS)?;
    let member_coefficient = f.coeff(n as usize).unwrap().norm();
    let membership = schwarz_from_function(&f, params, &SampleGrid::default(), MEMBERSHIP_TOL)?;
    let aouf = aouf_bound(params, n)?;
    Ok(FalsificationReport {
        params: *params,
        n,
        case,
        aouf_bound: aouf,
        theorem1_bound: theorem1_bound(params, n)?,
        member_coefficient,
        violated: membership.verdict && member_coefficient > aouf * (1.0 + 1e-9),
        membership,
    })
}
