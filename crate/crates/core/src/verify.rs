//! Empirical membership tests and class members built from Schwarz functions.
//!
//! Membership of `f` means `z f'/f = (p + M φ) / (1 + B φ)` for a Schwarz
//! function `φ`. Solving for `φ`,
//!
//! ```text
//! φ(z) = (q(z) - p) / (M - B q(z)),    q = z f'/f,
//! ```
//!
//! and the Schwarz lemma requires `|φ(z)| <= |z|`. [`schwarz_from_function`]
//! samples that ratio on circles inside the disk.
//!
//! In the other direction, clearing denominators gives the triangular
//! recurrence
//!
//! ```text
//! n a_{p+n} = Σ_{m=1..n} φ_m d_{n-m},   d_0 = c,   d_k = X_{k+1} a_{p+k},
//! ```
//!
//! which [`build_function_from_schwarz`] solves exactly for any `φ`.

use std::f64::consts::TAU;

use log::warn;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, UnitCircle, UnitDisc};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{aouf_bound, theorem1_bound};
use crate::error::{Error, Result};
use crate::params::ClassParams;
use crate::series::TruncatedSeries;

/// Largest admissible Blaschke zero modulus.
pub const MAX_ZERO_MODULUS: f64 = 1.0 - 1e-9;
/// Zero modulus cap for randomly generated Schwarz functions.
pub const SWEEP_ZERO_RADIUS: f64 = 0.95;
/// Most zeros a random Schwarz function carries (besides the one at 0).
pub const SWEEP_MAX_ZEROS: usize = 4;
/// Guard terms past `max_n` when building sweep members.
pub const SWEEP_GUARD_TERMS: usize = 8;
/// Widest coefficient window a sweep accepts, `max_n - p`.
pub const SWEEP_MAX_SPAN: u32 = 32;
/// Default slack on `|φ(z)| / |z| <= 1`.
pub const MEMBERSHIP_TOL: f64 = 1e-6;
/// `|M - B q(z)|` below this is treated as hitting the pole of the target map.
pub const DEGENERATE_DENOMINATOR: f64 = 1e-12;

/// `φ(z) = u · z · ∏ (z - α_i) / (1 - conj(α_i) z)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchwarzSpec {
    zeros: Vec<Complex64>,
    unimodular: Complex64,
}

impl SchwarzSpec {
    pub fn new(zeros: Vec<Complex64>, unimodular: Complex64) -> Result<Self> {
        if let Some(z) = zeros.iter().find(|z| z.norm().is_nan() || z.norm() > MAX_ZERO_MODULUS) {
            return Err(Error::InvalidSchwarz(format!("zero {z} lies outside |α| <= 1 - 1e-9")));
        }
        let off = (unimodular.norm() - 1.0).abs();
        if off.is_nan() || off > 1e-12 {
            return Err(Error::InvalidSchwarz(format!("factor {unimodular} is not unimodular")));
        }
        Ok(Self { zeros, unimodular })
    }

    /// `φ(z) = z`.
    pub fn identity() -> Self {
        Self {
            zeros: Vec::new(),
            unimodular: Complex64::new(1.0, 0.0),
        }
    }

    /// `φ(z) = u z^power`, `power >= 1`.
    pub fn monomial(power: usize, unimodular: Complex64) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidSchwarz("a Schwarz function vanishes at 0".into()));
        }
        Self::new(vec![Complex64::new(0.0, 0.0); power - 1], unimodular)
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn unimodular(&self) -> Complex64 {
        self.unimodular
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        self.zeros
            .iter()
            .fold(self.unimodular * z, |acc, &a| acc * (z - a) / (one - a.conj() * z))
    }

    /// Taylor coefficients, offset 1, known below `order`.
    pub fn taylor(&self, order: usize) -> TruncatedSeries {
        assert!(order >= 2, "order must be at least 2");
        let len = order - 1;
        let mut acc = TruncatedSeries::constant(self.unimodular, len);
        for &a in &self.zeros {
            // (z - α)/(1 - ᾱz) = -α + Σ_{k>=1} ᾱ^{k-1} (1 - |α|^2) z^k
            let mut coeffs = Vec::with_capacity(len);
            coeffs.push(-a);
            let mut power = Complex64::new(1.0 - a.norm_sqr(), 0.0);
            for _ in 1..len {
                coeffs.push(power);
                power *= a.conj();
            }
            acc = acc.mul(&TruncatedSeries::new(0, coeffs));
        }
        acc.shift(1)
    }

    /// Random Schwarz function: up to four zeros uniform in `|α| <= 0.95` and
    /// a uniform unimodular factor.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let count = rng.random_range(0..=SWEEP_MAX_ZEROS);
        let zeros = (0..count)
            .map(|_| {
                let [x, y]: [f64; 2] = UnitDisc.sample(rng);
                Complex64::new(x, y) * SWEEP_ZERO_RADIUS
            })
            .collect();
        let [x, y]: [f64; 2] = UnitCircle.sample(rng);
        let unimodular = Complex64::new(x, y);
        Self {
            zeros,
            unimodular: unimodular / unimodular.norm(),
        }
    }
}

/// Deterministic per-member generator: the seed picks the key, the member
/// index picks the ChaCha stream.
pub fn member_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Solves the recurrence for the member driven by the Schwarz series `phi`
/// (offset >= 1), returning `f` known below `order`.
pub fn build_function_from_schwarz_series(
    phi: &TruncatedSeries,
    params: &ClassParams,
    order: usize,
) -> Result<TruncatedSeries> {
    let p = params.p() as usize;
    if order < p + 2 {
        return Err(Error::PreconditionViolated(format!("order {order} must be at least p + 2")));
    }
    if phi.offset() == 0 && phi.coeffs()[0].norm() != 0.0 {
        return Err(Error::InvalidSchwarz("φ(0) must vanish".into()));
    }
    let terms = order - p - 1;
    if phi.order() < terms + 1 {
        return Err(Error::PreconditionViolated(format!(
            "Schwarz series known below z^{} but z^{} is needed",
            phi.order(),
            terms
        )));
    }
    let phi_at = |m: usize| phi.coeff(m).unwrap();
    let c = Complex64::new(params.c(), 0.0);
    let mut coeffs = Vec::with_capacity(terms + 1);
    coeffs.push(Complex64::new(1.0, 0.0));
    // d[k] = X_{k+1} a_{p+k}, d[0] = c
    let mut d = Vec::with_capacity(terms + 1);
    d.push(c);
    for n in 1..=terms {
        let rhs: Complex64 = (1..=n).map(|m| phi_at(m) * d[n - m]).sum();
        let a = rhs / n as f64;
        coeffs.push(a);
        d.push(a * params.x_factor(n as u32 + 1));
    }
    Ok(TruncatedSeries::new(p, coeffs))
}

pub fn build_function_from_schwarz(
    spec: &SchwarzSpec,
    params: &ClassParams,
    order: usize,
) -> Result<TruncatedSeries> {
    let p = params.p() as usize;
    if order < p + 2 {
        return Err(Error::PreconditionViolated(format!("order {order} must be at least p + 2")));
    }
    build_function_from_schwarz_series(&spec.taylor(order - p), params, order)
}

/// Sample circles for membership checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleGrid {
    pub radii: Vec<f64>,
    pub angles: usize,
    /// Largest acceptable tail estimate of the `q` series at a radius.
    pub tail_tol: f64,
}

impl Default for SampleGrid {
    fn default() -> Self {
        Self {
            radii: vec![0.3, 0.6, 0.9, 0.99],
            angles: 256,
            tail_tol: 1e-6,
        }
    }
}

impl SampleGrid {
    pub fn points(&self, radius: f64) -> impl Iterator<Item = Complex64> + '_ {
        let angles = self.angles;
        (0..angles).map(move |j| Complex64::from_polar(radius, TAU * j as f64 / angles as f64))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExcludedRadius {
    pub radius: f64,
    pub tail_estimate: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    /// `max |φ(z)| / |z|` over the sampled points.
    pub max_ratio: f64,
    pub radii_used: Vec<f64>,
    pub radii_excluded: Vec<ExcludedRadius>,
    pub angles: usize,
    pub series_order: usize,
    pub tolerance: f64,
    pub verdict: bool,
}

/// Recovered `φ` values on the usable part of a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct RecoveredSchwarz {
    pub samples: Vec<(Complex64, Complex64)>,
    pub radii_used: Vec<f64>,
    pub radii_excluded: Vec<ExcludedRadius>,
    pub series_order: usize,
}

/// Rough bound on `Σ_{k>=N} |coeffs_k| r^k` from the decay of the known
/// upper half. Infinite when no geometric decay is visible.
pub fn tail_estimate(coeffs: &[Complex64], radius: f64) -> f64 {
    let n = coeffs.len();
    let terms: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c.norm() * radius.powi(k as i32))
        .collect();
    if n < 8 {
        return if terms[n / 2..].iter().all(|&t| t == 0.0) { 0.0 } else { f64::INFINITY };
    }
    let quarter = n / 4;
    let window_max = |lo: usize, hi: usize| terms[lo..hi].iter().copied().fold(0.0, f64::max);
    let early = window_max(n - 2 * quarter, n - quarter);
    let late = window_max(n - quarter, n);
    if late == 0.0 {
        return 0.0;
    }
    if early == 0.0 || !late.is_finite() {
        return f64::INFINITY;
    }
    let ratio = (late / early).powf(1.0 / quarter as f64);
    if ratio >= 1.0 {
        f64::INFINITY
    } else {
        late / (1.0 - ratio)
    }
}

fn check_normalized(f: &TruncatedSeries, params: &ClassParams) -> Result<()> {
    if f.offset() != params.p() as usize || (f.coeffs()[0] - 1.0).norm() > 1e-12 {
        return Err(Error::NotNormalized { p: params.p() });
    }
    Ok(())
}

/// `φ = (q - p) / (M - B q)` at every usable grid point.
pub fn recover_schwarz(
    f: &TruncatedSeries,
    params: &ClassParams,
    grid: &SampleGrid,
) -> Result<RecoveredSchwarz> {
    check_normalized(f, params)?;
    let q = f.z_derivative().divide(f)?;
    let p = params.p() as f64;
    let (m, b) = (params.m(), params.b());
    let mut samples = Vec::new();
    let mut radii_used = Vec::new();
    let mut radii_excluded = Vec::new();
    for &radius in &grid.radii {
        let tail = tail_estimate(q.coeffs(), radius);
        if tail.is_nan() || tail > grid.tail_tol {
            warn!(
                "radius {radius} excluded: q-series tail estimate {tail:e} exceeds {:e} at order {}",
                grid.tail_tol,
                q.order()
            );
            radii_excluded.push(ExcludedRadius {
                radius,
                tail_estimate: tail,
            });
            continue;
        }
        radii_used.push(radius);
        for z in grid.points(radius) {
            let qz = q.eval(z);
            let den = m - b * qz;
            if den.norm() < DEGENERATE_DENOMINATOR {
                return Err(Error::DegenerateDenominator { z, value: den.norm() });
            }
            samples.push((z, (qz - p) / den));
        }
    }
    if radii_used.is_empty() {
        return Err(Error::InsufficientOrder { order: f.order() });
    }
    Ok(RecoveredSchwarz {
        samples,
        radii_used,
        radii_excluded,
        series_order: f.order(),
    })
}

/// Samples `|φ(z)| / |z|` for the `φ` implied by `f`; the verdict is
/// `max_ratio <= 1 + tolerance`.
pub fn schwarz_from_function(
    f: &TruncatedSeries,
    params: &ClassParams,
    grid: &SampleGrid,
    tolerance: f64,
) -> Result<MembershipReport> {
    let recovered = recover_schwarz(f, params, grid)?;
    let max_ratio = recovered
        .samples
        .iter()
        .map(|(z, phi)| phi.norm() / z.norm())
        .fold(0.0, f64::max);
    Ok(MembershipReport {
        max_ratio,
        radii_used: recovered.radii_used,
        radii_excluded: recovered.radii_excluded,
        angles: grid.angles,
        series_order: recovered.series_order,
        tolerance,
        verdict: max_ratio <= 1.0 + tolerance,
    })
}

/// Largest `|φ_recovered(z) - φ(z)|` over the usable grid after building the
/// member driven by `spec`.
pub fn round_trip_error(
    spec: &SchwarzSpec,
    params: &ClassParams,
    order: usize,
    grid: &SampleGrid,
) -> Result<(f64, RecoveredSchwarz)> {
    let f = build_function_from_schwarz(spec, params, order)?;
    let recovered = recover_schwarz(&f, params, grid)?;
    let err = recovered
        .samples
        .iter()
        .map(|&(z, phi)| (phi - spec.eval(z)).norm())
        .fold(0.0, f64::max);
    Ok((err, recovered))
}

/// A coefficient exceeding a bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub member: usize,
    pub n: u32,
    pub modulus: f64,
    pub bound: f64,
    pub schwarz: SchwarzSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub params: ClassParams,
    pub seed: u64,
    pub max_n: u32,
    /// Random members plus the monomial drivers `φ = z^s`.
    pub members: usize,
    pub random_members: usize,
    pub theorem1_violations: Vec<Violation>,
    pub aouf_violations: Vec<Violation>,
}

/// Schwarz function for sweep member `index`: random for `index < count`,
/// then `z, z^2, ..., z^(max_n - p)`.
pub fn sweep_member(seed: u64, count: usize, index: usize) -> SchwarzSpec {
    if index < count {
        SchwarzSpec::random(&mut member_rng(seed, index as u64))
    } else {
        SchwarzSpec::monomial(index - count + 1, Complex64::new(1.0, 0.0)).unwrap()
    }
}

/// Checks `|a_n| <= bound·(1 + tolerance)` for every member and every
/// `p+1 <= n <= max_n`, against both the sharp bound and the older product
/// formula.
pub fn random_member_sweep(
    params: &ClassParams,
    count: usize,
    max_n: u32,
    seed: u64,
    tolerance: f64,
) -> Result<SweepReport> {
    let p = params.p();
    params.check_index(max_n)?;
    if max_n - p > SWEEP_MAX_SPAN {
        return Err(Error::PreconditionViolated(format!(
            "max_n - p = {} exceeds {SWEEP_MAX_SPAN}",
            max_n - p
        )));
    }
    let indices: Vec<u32> = (p + 1..=max_n).collect();
    let sharp: Vec<f64> = indices.iter().map(|&n| theorem1_bound(params, n)).collect::<Result<_>>()?;
    let aouf: Vec<f64> = indices.iter().map(|&n| aouf_bound(params, n)).collect::<Result<_>>()?;
    let order = max_n as usize + 1 + SWEEP_GUARD_TERMS;
    let members = count + (max_n - p) as usize;

    let per_member: Vec<(Vec<Violation>, Vec<Violation>)> = (0..members)
        .into_par_iter()
        .map(|index| {
            let spec = sweep_member(seed, count, index);
            let f = build_function_from_schwarz(&spec, params, order)?;
            let mut over_sharp = Vec::new();
            let mut over_aouf = Vec::new();
            for (i, &n) in indices.iter().enumerate() {
                let modulus = f.coeff(n as usize).unwrap().norm();
                let record = |bound: f64| Violation {
                    member: index,
                    n,
                    modulus,
                    bound,
                    schwarz: spec.clone(),
                };
                if modulus > sharp[i] * (1.0 + tolerance) {
                    over_sharp.push(record(sharp[i]));
                }
                if modulus > aouf[i] * (1.0 + tolerance) {
                    over_aouf.push(record(aouf[i]));
                }
            }
            Ok((over_sharp, over_aouf))
        })
        .collect::<Result<_>>()?;

    let (theorem1_violations, aouf_violations) = per_member.into_iter().fold(
        (Vec::new(), Vec::new()),
        |(mut s, mut a), (ms, ma)| {
            s.extend(ms);
            a.extend(ma);
            (s, a)
        },
    );
    Ok(SweepReport {
        params: *params,
        seed,
        max_n,
        members,
        random_members: count,
        theorem1_violations,
        aouf_violations,
    })
}

/// Uniform admissible `(A, B, β)` with `p` uniform in `1..=max_p`.
pub fn random_class_params<R: Rng + ?Sized>(rng: &mut R, max_p: u32) -> ClassParams {
    let b = rng.random_range(-1.0..0.999);
    let a = rng.random_range(b + 1e-3..=1.0);
    let beta = rng.random_range(0.0..1.0);
    let p = rng.random_range(1..=max_p);
    ClassParams::new(a, b, beta, p).expect("sampled inside the admissible region")
}

/// Twenty parameter points covering the positive, non-positive and mixed
/// regimes at `n = p + 10`, used for the default no-violation sweep.
pub fn default_sweep_grid() -> Vec<ClassParams> {
    const POINTS: [(f64, f64, f64, u32); 20] = [
        (1.0, -1.0, 0.0, 1),
        (0.9, -0.9, 0.3, 2),
        (0.5, -1.0, 0.0, 1),
        (1.0, -0.8, 0.5, 3),
        (0.2, -0.9, 0.1, 1),
        (0.7, -0.6, 0.0, 2),
        (1.0, -1.0, 0.9, 4),
        (0.8, 0.5, 0.0, 1),
        (0.5, 0.4, 0.5, 2),
        (0.3, 0.0, 0.0, 1),
        (0.1, -0.2, 0.5, 1),
        (0.9, 0.8, 0.2, 3),
        (0.0, -0.5, 0.0, 1),
        (1.0, 0.9, 0.0, 2),
        (-0.1, -0.7, 0.5, 2),
        (1.0, 0.0, 0.0, 3),
        (0.6, 0.0, 0.0, 2),
        (0.1, -0.5, 0.0, 1),
        (-0.5, -0.8, 0.0, 1),
        (0.5, 0.0, 0.5, 4),
    ];
    POINTS
        .iter()
        .map(|&(a, b, beta, p)| ClassParams::new(a, b, beta, p).expect("grid points are admissible"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn params(a: f64, b: f64, beta: f64, p: u32) -> ClassParams {
        ClassParams::new(a, b, beta, p).unwrap()
    }

    #[test]
    fn schwarz_taylor_matches_eval() {
        let spec = SchwarzSpec::new(
            vec![Complex64::new(0.3, -0.4), Complex64::new(-0.7, 0.1)],
            Complex64::from_polar(1.0, 0.8),
        )
        .unwrap();
        let series = spec.taylor(160);
        assert_eq!(series.offset(), 1);
        for z in [Complex64::new(0.2, 0.1), Complex64::new(-0.5, 0.4)] {
            assert!((series.eval(z) - spec.eval(z)).norm() < 1e-12);
        }
    }

    #[test]
    fn schwarz_rejects_bad_data() {
        assert!(SchwarzSpec::new(vec![c(1.0)], c(1.0)).is_err());
        assert!(SchwarzSpec::new(vec![], c(0.9)).is_err());
        assert!(SchwarzSpec::monomial(0, c(1.0)).is_err());
    }

    #[test]
    fn identity_builds_koebe() {
        let koebe = params(1.0, -1.0, 0.0, 1);
        let f = build_function_from_schwarz(&SchwarzSpec::identity(), &koebe, 30).unwrap();
        assert_eq!(f.offset(), 1);
        for k in 0..29 {
            assert!((f.coeff(1 + k).unwrap() - c((k + 1) as f64)).norm() < 1e-9);
        }
    }

    #[test]
    fn first_step_attains_case_one() {
        for prm in [params(0.8, 0.5, 0.0, 1), params(0.3, -0.6, 0.4, 3)] {
            let f = build_function_from_schwarz(&SchwarzSpec::identity(), &prm, prm.p() as usize + 4)
                .unwrap();
            let a = f.coeff(prm.p() as usize + 1).unwrap();
            assert!((a - c(prm.c())).norm() < 1e-14);
        }
    }

    #[test]
    fn z_squared_member() {
        let prm = params(0.8, 0.5, 0.0, 1);
        let spec = SchwarzSpec::monomial(2, c(1.0)).unwrap();
        let f = build_function_from_schwarz(&spec, &prm, 8).unwrap();
        assert!(f.coeff(2).unwrap().norm() < 1e-15);
        assert!((f.coeff(3).unwrap() - c(0.15)).norm() < 1e-14);
    }

    #[test]
    fn membership_koebe() {
        let prm = params(1.0, -1.0, 0.0, 1);
        let f = build_function_from_schwarz(&SchwarzSpec::identity(), &prm, 400).unwrap();
        let report = schwarz_from_function(&f, &prm, &SampleGrid::default(), MEMBERSHIP_TOL).unwrap();
        assert!(report.verdict);
        assert!((report.max_ratio - 1.0).abs() < 1e-6);
        // q = (1+z)/(1-z) does not decay at 0.99 with 400 terms
        assert_eq!(report.radii_excluded.len(), 1);
        assert_eq!(report.radii_excluded[0].radius, 0.99);
    }

    #[test]
    fn membership_z_to_the_p() {
        let prm = params(0.4, -0.2, 0.3, 2);
        let f = TruncatedSeries::monomial(2, 40);
        let report = schwarz_from_function(&f, &prm, &SampleGrid::default(), MEMBERSHIP_TOL).unwrap();
        assert!(report.verdict);
        assert_eq!(report.max_ratio, 0.0);
        assert!(report.radii_excluded.is_empty());
    }

    #[test]
    fn membership_rejects_large_second_coefficient() {
        let prm = params(0.8, 0.5, 0.0, 1);
        let f = TruncatedSeries::from_polynomial(1, &[c(1.0), c(2.0)], 60);
        let report = schwarz_from_function(&f, &prm, &SampleGrid::default(), MEMBERSHIP_TOL).unwrap();
        assert!(!report.verdict);
        assert!(report.max_ratio > 1.0);
        assert_eq!(report.radii_used, vec![0.3]);
    }

    #[test]
    fn membership_requires_normalization() {
        let prm = params(0.8, 0.5, 0.0, 1);
        let f = TruncatedSeries::from_real(2, &[1.0, 0.0]);
        assert_eq!(
            schwarz_from_function(&f, &prm, &SampleGrid::default(), MEMBERSHIP_TOL),
            Err(Error::NotNormalized { p: 1 })
        );
    }

    #[test]
    fn degenerate_denominator_detected() {
        // f = z e^{2z} has q = 1 + 2z, which equals M/B = 1.6 at z = 0.3
        let prm = params(0.8, 0.5, 0.0, 1);
        let f = crate::series::exp_series(c(2.0), 40).shift(1);
        let grid = SampleGrid {
            radii: vec![0.3],
            angles: 4,
            tail_tol: 1e-6,
        };
        assert!(matches!(
            schwarz_from_function(&f, &prm, &grid, MEMBERSHIP_TOL),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn insufficient_order_reported() {
        let prm = params(1.0, -1.0, 0.0, 1);
        let f = build_function_from_schwarz(&SchwarzSpec::identity(), &prm, 12).unwrap();
        let grid = SampleGrid {
            radii: vec![0.99],
            angles: 8,
            tail_tol: 1e-6,
        };
        assert_eq!(
            schwarz_from_function(&f, &prm, &grid, MEMBERSHIP_TOL),
            Err(Error::InsufficientOrder { order: 12 })
        );
    }

    #[test]
    fn tail_estimate_behaviour() {
        let geom: Vec<Complex64> = (0..100).map(|_| c(1.0)).collect();
        assert!(tail_estimate(&geom, 0.5) < 1e-12);
        assert!(tail_estimate(&geom, 1.0).is_infinite());
        let mut poly = vec![c(0.0); 50];
        poly[0] = c(1.0);
        poly[1] = c(3.0);
        assert_eq!(tail_estimate(&poly, 0.99), 0.0);
    }

    #[test]
    fn sweep_counts_and_determinism() {
        let prm = params(0.8, 0.5, 0.0, 1);
        let a = random_member_sweep(&prm, 50, 8, 7, 1e-9).unwrap();
        let b = random_member_sweep(&prm, 50, 8, 7, 1e-9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.members, 50 + 7);
        assert!(a.theorem1_violations.is_empty());
        // φ = z^2 is member 51 and beats the product formula at n = 3
        assert!(a
            .aouf_violations
            .iter()
            .any(|v| v.member == 51 && v.n == 3 && (v.modulus - 0.15).abs() < 1e-12));

        let empty = random_member_sweep(&prm, 0, 8, 7, 1e-9).unwrap();
        assert!(empty.theorem1_violations.is_empty());
        assert_eq!(empty.random_members, 0);
    }

    #[test]
    fn sweep_rejects_wide_window() {
        let prm = params(0.8, 0.5, 0.0, 1);
        assert!(random_member_sweep(&prm, 1, 40, 0, 1e-9).is_err());
        assert!(random_member_sweep(&prm, 1, 1, 0, 1e-9).is_err());
    }

    #[test]
    fn default_grid_spans_regimes() {
        use crate::params::CaseLabel;
        let labels: Vec<CaseLabel> = default_sweep_grid()
            .iter()
            .map(|p| p.classify_case(p.p() + 10).unwrap())
            .collect();
        assert_eq!(labels.len(), 20);
        for label in [CaseLabel::PositiveTerms, CaseLabel::NonPositiveTerms, CaseLabel::MixedTerms] {
            assert!(labels.iter().filter(|&&l| l == label).count() >= 3, "{label:?}: {labels:?}");
        }
    }

    #[test]
    fn member_streams_differ() {
        let a = sweep_member(3, 10, 0);
        let b = sweep_member(3, 10, 1);
        assert_ne!(a, b);
        assert_eq!(a, sweep_member(3, 10, 0));
    }
}
