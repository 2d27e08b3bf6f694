#![allow(dead_code)]

use pvalent::{CaseLabel, ClassParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform admissible parameters with `p` in `1..=max_p`.
pub fn random_params<R: Rng>(rng: &mut R, max_p: u32) -> ClassParams {
    let b = rng.random_range(-1.0..0.999);
    let a = rng.random_range(b + 1e-3..=1.0);
    let beta = rng.random_range(0.0..1.0);
    let p = rng.random_range(1..=max_p);
    ClassParams::new(a, b, beta, p).unwrap()
}

/// Rejection-samples `count` pairs `(params, n)` with the given label and
/// `2 <= n - p <= max_span`.
pub fn sample_case<R: Rng>(
    rng: &mut R,
    label: CaseLabel,
    count: usize,
    max_p: u32,
    max_span: u32,
) -> Vec<(ClassParams, u32)> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let params = random_params(rng, max_p);
        let n = params.p() + rng.random_range(2..=max_span);
        if params.classify_case(n).unwrap() == label {
            out.push((params, n));
        }
    }
    out
}

pub fn rel(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}
