mod common;

use common::{random_params, rel, rng, sample_case};
use pvalent::bounds::{aouf_bound, bound_report, clunie_envelope, induction_identity_residual, theorem1_bound};
use pvalent::extremal::ExtremalSpec;
use pvalent::{CaseLabel, ClassParams};

/// Janowski-class bounds for `p = 1, β = 0`, written out independently.
fn janowski_three_case(a: f64, b: f64, n: u32) -> Option<f64> {
    if n == 2 {
        return Some(a - b);
    }
    if a - (n as f64 - 1.0) * b > n as f64 - 2.0 {
        let mut prod = 1.0;
        let mut fact = 1.0;
        for j in 2..=n {
            prod *= a - (j as f64 - 1.0) * b;
            fact *= (j - 1) as f64;
        }
        return Some(prod / fact);
    }
    if a - 2.0 * b <= 1.0 {
        return Some((a - b) / (n as f64 - 1.0));
    }
    None
}

#[test]
fn janowski_reduction() {
    let mut checked = 0;
    for i in 0..=20 {
        for j in 0..=20 {
            let a = i as f64 / 10.0 - 1.0;
            let b = j as f64 / 10.0 - 1.0;
            let Ok(params) = ClassParams::new(a, b, 0.0, 1) else { continue };
            for n in 2..=12 {
                let bound = theorem1_bound(&params, n).unwrap();
                match janowski_three_case(params.a(), params.b(), n) {
                    Some(expected) => {
                        assert!(rel(bound, expected) <= 1e-12, "A={a} B={b} n={n}: {bound} vs {expected}");
                        checked += 1;
                    }
                    None => assert_eq!(params.classify_case(n).unwrap(), CaseLabel::MixedTerms),
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn full_class_first_coefficient() {
    for beta in [0.0, 0.3, 0.75] {
        for p in 1..=5 {
            let params = ClassParams::new(1.0, -1.0, beta, p).unwrap();
            let bound = theorem1_bound(&params, p + 1).unwrap();
            assert!(rel(bound, 2.0 * (p as f64 - beta)) <= 1e-12);
        }
    }
}

#[test]
fn envelope_matches_in_proven_regimes() {
    let mut r = rng(10);
    for label in [CaseLabel::PositiveTerms, CaseLabel::NonPositiveTerms] {
        for (params, n) in sample_case(&mut r, label, 400, 5, 20) {
            let env = clunie_envelope(&params, n).unwrap();
            let sharp = theorem1_bound(&params, n).unwrap();
            assert!(rel(env, sharp) <= 1e-9, "{label:?} {params:?} n={n}: {env} vs {sharp}");
        }
    }
}

#[test]
fn envelope_dominates_global_member_everywhere() {
    // the global family is a class member for every parameter set, so any
    // valid bound must sit above its coefficients
    let mut r = rng(11);
    for _ in 0..500 {
        let params = random_params(&mut r, 5);
        let max_n = params.p() + 16;
        let f = ExtremalSpec::global(params).expand(max_n as usize + 1).unwrap();
        for n in params.p() + 1..=max_n {
            let a = f.coeff(n as usize).unwrap().norm();
            let bound = theorem1_bound(&params, n).unwrap();
            assert!(a <= bound * (1.0 + 1e-9), "{params:?} n={n}: {a} > {bound}");
        }
    }
}

#[test]
fn per_index_case_two_formula_fails_in_mixed_regime() {
    let params = ClassParams::new(1.0, 0.0, 0.0, 3).unwrap();
    assert!(params.per_n_condition(7));
    let f = ExtremalSpec::global(params).expand(8).unwrap();
    let a7 = f.coeff(7).unwrap().norm();
    assert!(rel(a7, 81.0 / 24.0) < 1e-12);
    let per_index_formula = params.c() / 4.0;
    assert!(a7 > 4.0 * per_index_formula);
    assert!(a7 <= theorem1_bound(&params, 7).unwrap() * (1.0 + 1e-12));
}

#[test]
fn identity_residual_small() {
    let mut r = rng(12);
    for (params, m) in sample_case(&mut r, CaseLabel::PositiveTerms, 600, 6, 20) {
        assert!(induction_identity_residual(&params, m).unwrap() <= 1e-9);
    }
}

#[test]
fn product_formula_undercuts_in_non_positive_regime() {
    let mut r = rng(13);
    let points = sample_case(&mut r, CaseLabel::NonPositiveTerms, 500, 5, 12);
    for (params, n) in points {
        if params.case_margin(2) < 0.0 {
            let aouf = aouf_bound(&params, n).unwrap();
            let sharp = theorem1_bound(&params, n).unwrap();
            assert!(aouf < sharp, "{params:?} n={n}: {aouf} vs {sharp}");
        }
    }
}

#[test]
fn product_formula_agrees_in_positive_regime() {
    let mut r = rng(14);
    for (params, n) in sample_case(&mut r, CaseLabel::PositiveTerms, 300, 5, 12) {
        assert!(rel(aouf_bound(&params, n).unwrap(), theorem1_bound(&params, n).unwrap()) <= 1e-12);
    }
}

#[test]
fn showcase_gap() {
    let params = ClassParams::new(0.8, 0.5, 0.0, 1).unwrap();
    let report = bound_report(&params, 3).unwrap();
    assert_eq!(report.case, CaseLabel::NonPositiveTerms);
    assert!(rel(report.aouf_bound, 0.03) < 1e-12);
    assert!(rel(report.theorem1_bound, 0.15) < 1e-12);
    assert!(report.sharp);
}
