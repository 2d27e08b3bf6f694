mod common;

use common::{random_params, rel, rng, sample_case};
use num_complex::Complex64;
use pvalent::bounds::{aouf_bound, theorem1_bound};
use pvalent::extremal::{attainment_report, ExtremalFamily};
use pvalent::{CaseLabel, ExtremalSpec};
use rand::Rng;

#[test]
fn both_families_attain_first_coefficient() {
    let mut r = rng(20);
    for _ in 0..300 {
        let params = random_params(&mut r, 6);
        let n = params.p() + 1;
        for spec in [ExtremalSpec::global(params), ExtremalSpec::per_n(params, n).unwrap()] {
            let f = spec.expand(n as usize + 1).unwrap();
            assert!(rel(f.coeff(n as usize).unwrap().norm(), params.c()) <= 1e-12);
        }
    }
}

#[test]
fn global_attains_positive_regime() {
    let mut r = rng(21);
    for (params, n) in sample_case(&mut r, CaseLabel::PositiveTerms, 60, 4, 12) {
        let report = attainment_report(&ExtremalSpec::global(params), n).unwrap();
        assert!(report.attained, "{params:?} n={n}: {report:?}");
    }
}

#[test]
fn per_n_attains_non_positive_regime() {
    let mut r = rng(22);
    for (params, n) in sample_case(&mut r, CaseLabel::NonPositiveTerms, 60, 4, 12) {
        let report = attainment_report(&ExtremalSpec::per_n(params, n).unwrap(), n).unwrap();
        assert!(report.attained, "{params:?} n={n}: {report:?}");
        assert_eq!(report.printed_index_mismatch, params.p() > 1);
    }
}

#[test]
fn rotation_keeps_moduli() {
    let mut r = rng(23);
    for _ in 0..50 {
        let params = random_params(&mut r, 4);
        let n = params.p() + r.random_range(1..=8);
        for family in [ExtremalFamily::Global, ExtremalFamily::PerN { n }] {
            let base = ExtremalSpec::new(params, family, Complex64::new(1.0, 0.0)).unwrap();
            let reference = base.expand(n as usize + 8).unwrap();
            for j in 0..8 {
                let turns = j as f64 / 8.0 + 0.013;
                let rotated = base.with_delta_turns(turns).expand(n as usize + 8).unwrap();
                for k in params.p() as usize..n as usize + 8 {
                    let (x, y) = (reference.coeff(k).unwrap().norm(), rotated.coeff(k).unwrap().norm());
                    assert!((x - y).abs() <= 1e-12 * x.max(1.0));
                }
            }
        }
    }
}

#[test]
fn global_moduli_equal_product_formula() {
    let mut r = rng(24);
    for _ in 0..500 {
        let params = random_params(&mut r, 5);
        let max_n = params.p() + 14;
        let f = ExtremalSpec::global(params).expand(max_n as usize + 1).unwrap();
        for n in params.p() + 1..=max_n {
            let modulus = f.coeff(n as usize).unwrap().norm();
            assert!(rel(modulus, aouf_bound(&params, n).unwrap()) <= 1e-9);
        }
    }
}

#[test]
fn per_n_is_lacunary() {
    let mut r = rng(25);
    for _ in 0..100 {
        let params = random_params(&mut r, 4);
        let n = params.p() + r.random_range(2..=6);
        let s = (n - params.p()) as usize;
        let f = ExtremalSpec::per_n(params, n).unwrap().expand(params.p() as usize + 5 * s + 1).unwrap();
        for (i, c) in f.coeffs().iter().enumerate() {
            if i % s != 0 {
                assert_eq!(c.norm(), 0.0);
            }
        }
        let first = f.coeff(n as usize).unwrap().norm();
        assert!(rel(first, params.c() / s as f64) <= 1e-12);
        if params.classify_case(n).unwrap() == CaseLabel::NonPositiveTerms {
            assert!(rel(first, theorem1_bound(&params, n).unwrap()) <= 1e-12);
        }
    }
}
