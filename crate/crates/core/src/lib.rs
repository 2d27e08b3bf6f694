//! Coefficient bounds for p-valent starlike functions of Janowski type.
//!
//! A function `f(z) = z^p + Σ a_n z^n` belongs to the class `S_p(A, B, β)`
//! when `z f'(z)/f(z)` is subordinate to `(p + [pB + (A-B)(p-β)] z)/(1 + Bz)`.
//! This crate computes the sharp bounds on `|a_n|`, expands the functions that
//! attain them, and checks both claims numerically:
//!
//! * [`series`]: truncated complex power series.
//! * [`params`]: validated `(A, B, β, p)` and the per-index case split.
//! * [`bounds`]: the sharp bounds, the older product formula and the Clunie
//!   envelope.
//! * [`extremal`]: the extremal families and attainment reports.
//! * [`verify`]: members built from Schwarz functions, membership sampling
//!   and randomized sweeps.
//! * [`audit`]: the summand sign table and the product-formula counterexample.
//!
//! ```
//! use pvalent::{bounds, ClassParams, CaseLabel};
//!
//! let koebe = ClassParams::new(1.0, -1.0, 0.0, 1)?;
//! assert_eq!(koebe.classify_case(5)?, CaseLabel::PositiveTerms);
//! assert!((bounds::theorem1_bound(&koebe, 5)? - 5.0).abs() < 1e-12);
//! # Ok::<(), pvalent::Error>(())
//! ```

pub mod audit;
pub mod bounds;
mod error;
pub mod extremal;
pub mod params;
pub mod series;
pub mod verify;

pub use bounds::BoundReport;
pub use error::{Error, Result};
pub use extremal::{ExtremalFamily, ExtremalSpec};
pub use params::{CaseLabel, ClassParams};
pub use series::TruncatedSeries;
pub use verify::{MembershipReport, SampleGrid, SchwarzSpec};

// Compile and run the guide's snippets as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/class.md")]
    mod class {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/extremal.md")]
    mod extremal {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/audit.md")]
    mod audit {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
