use thiserror::Error;

use crate::params::CaseLabel;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("coefficient index {n} is below the first free coefficient p + 1 = {first}")]
    IndexBelowRange { n: u32, first: u32 },

    #[error("division by a series whose leading coefficient is zero")]
    DivisionByZeroLeadingCoefficient,

    #[error("quotient would have negative offset (dividend offset {dividend}, divisor offset {divisor})")]
    NegativeOffset { dividend: usize, divisor: usize },

    #[error("no coefficients remain known after truncation")]
    OrderExhausted,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{family} family does not witness case {case:?} at n = {n}")]
    CaseMismatch {
        family: &'static str,
        case: CaseLabel,
        n: u32,
    },

    #[error("invalid extremal specification: {0}")]
    InvalidExtremal(String),

    #[error("series must have offset p = {p} and leading coefficient 1")]
    NotNormalized { p: u32 },

    #[error("Moebius denominator |M - B q(z)| = {value:e} vanishes at z = {z}")]
    DegenerateDenominator { z: num_complex::Complex64, value: f64 },

    #[error("series of order {order} does not converge to tolerance at any sample radius")]
    InsufficientOrder { order: usize },

    #[error("invalid Schwarz function: {0}")]
    InvalidSchwarz(String),

    #[error("not a falsification regime: n = {n} is classified {case:?}, where Theorem A agrees with the sharp bound")]
    NotAFalsificationRegime { n: u32, case: CaseLabel },
}
