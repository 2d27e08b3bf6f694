//! Truncated complex power series.
//!
//! A [`TruncatedSeries`] stores the coefficients of `z^offset, ...,
//! z^(order-1)`. Everything at or above `order` is *unknown*, not zero, and
//! every operation propagates that pessimistically: the result's order is the
//! largest order the operands actually determine.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex Taylor coefficients `coeffs[i]` of `z^(offset + i)`, known below
/// `order = offset + coeffs.len()`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    offset: usize,
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Panics if `coeffs` is empty: a series must know at least one power.
    pub fn new(offset: usize, coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one known coefficient");
        Self { offset, coeffs }
    }

    /// Real coefficients, for tests and polynomial inputs.
    pub fn from_real(offset: usize, coeffs: &[f64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// A polynomial whose coefficients above its degree are known zeros up to
    /// `order`.
    pub fn from_polynomial(offset: usize, coeffs: &[Complex64], order: usize) -> Self {
        assert!(order > offset, "order must exceed offset");
        let len = order - offset;
        let mut padded = vec![Complex64::new(0.0, 0.0); len];
        for (slot, &c) in padded.iter_mut().zip(coeffs) {
            *slot = c;
        }
        Self::new(offset, padded)
    }

    /// The constant `value`, known up to `order`.
    pub fn constant(value: Complex64, order: usize) -> Self {
        Self::from_polynomial(0, &[value], order)
    }

    /// `z^power`, known up to `order`.
    pub fn monomial(power: usize, order: usize) -> Self {
        Self::from_polynomial(power, &[Complex64::new(1.0, 0.0)], order)
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// First power whose coefficient is unknown.
    pub fn order(&self) -> usize {
        self.offset + self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^power`: zero below the offset, `None` at or above the
    /// order.
    pub fn coeff(&self, power: usize) -> Option<Complex64> {
        if power < self.offset {
            Some(Complex64::new(0.0, 0.0))
        } else {
            self.coeffs.get(power - self.offset).copied()
        }
    }

    /// Drops every coefficient at or above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order <= self.offset {
            return Err(Error::OrderExhausted);
        }
        let len = (order - self.offset).min(self.coeffs.len());
        Ok(Self::new(self.offset, self.coeffs[..len].to_vec()))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        Self::new(self.offset + k, self.coeffs.clone())
    }

    /// Coefficients re-expressed from `offset` (which must not exceed the
    /// current one) up to `order`.
    fn dense(&self, offset: usize, order: usize) -> Vec<Complex64> {
        debug_assert!(offset <= self.offset && order <= self.order());
        (offset..order).map(|k| self.coeff(k).unwrap()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let offset = self.offset.min(other.offset);
        let order = self.order().min(other.order());
        let a = self.dense(offset, order);
        let b = other.dense(offset, order);
        Self::new(offset, a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|&c| c * factor).collect())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| (0..=k).map(|i| self.coeffs[i] * other.coeffs[k - i]).sum())
            .collect();
        Self::new(self.offset + other.offset, coeffs)
    }

    /// Termwise `d/dz`. Fails when nothing would remain known (a constant
    /// known only at `z^0`).
    pub fn differentiate(&self) -> Result<Self> {
        if self.offset > 0 {
            let coeffs = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (self.offset + i) as f64)
                .collect();
            return Ok(Self::new(self.offset - 1, coeffs));
        }
        if self.coeffs.len() < 2 {
            return Err(Error::OrderExhausted);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (i + 1) as f64)
            .collect();
        Ok(Self::new(0, coeffs))
    }

    /// The Euler operator `z d/dz`; keeps offset and order.
    pub fn z_derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * (self.offset + i) as f64)
            .collect();
        Self::new(self.offset, coeffs)
    }

    /// Series quotient `self / divisor`.
    ///
    /// The divisor's first stored coefficient must be nonzero and its offset
    /// may not exceed the dividend's.
    pub fn divide(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor.coeffs[0];
        if lead.norm() == 0.0 {
            return Err(Error::DivisionByZeroLeadingCoefficient);
        }
        if divisor.offset > self.offset {
            return Err(Error::NegativeOffset {
                dividend: self.offset,
                divisor: divisor.offset,
            });
        }
        let len = self.coeffs.len().min(divisor.coeffs.len());
        let inv_lead = lead.inv();
        let mut out: Vec<Complex64> = Vec::with_capacity(len);
        for k in 0..len {
            let acc: Complex64 = (1..=k).map(|i| divisor.coeffs[i] * out[k - i]).sum();
            out.push((self.coeffs[k] - acc) * inv_lead);
        }
        Ok(Self::new(self.offset - divisor.offset, out))
    }

    /// Horner evaluation of the known part.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let poly = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
        poly * z.powu(self.offset as u32)
    }

    /// Largest coefficient modulus, used as the scale for relative comparisons.
    pub fn max_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficientwise comparison on the common known range, relative to the
    /// larger coefficient scale of the two series.
    pub fn approx_eq(&self, other: &Self, rtol: f64) -> bool {
        let lo = self.offset.min(other.offset);
        let hi = self.order().min(other.order());
        let scale = self.max_modulus().max(other.max_modulus()).max(f64::MIN_POSITIVE);
        (lo..hi).all(|k| {
            let (x, y) = (self.coeff(k).unwrap(), other.coeff(k).unwrap());
            (x - y).norm() <= rtol * scale
        })
    }
}

/// `(1 + base·z)^lambda` on the branch equal to 1 at `z = 0`, known below
/// `order`.
///
/// Built from the generalized binomial recurrence
/// `c_m = c_{m-1} (lambda - m + 1) base / m`.
pub fn pow_binomial(base: Complex64, lambda: Complex64, order: usize) -> TruncatedSeries {
    assert!(order >= 1, "order must be positive");
    let mut coeffs = Vec::with_capacity(order);
    let mut c = Complex64::new(1.0, 0.0);
    coeffs.push(c);
    for m in 1..order {
        c = c * (lambda - (m - 1) as f64) * base / m as f64;
        coeffs.push(c);
    }
    TruncatedSeries::new(0, coeffs)
}

/// `exp(a·z)`, known below `order`.
pub fn exp_series(a: Complex64, order: usize) -> TruncatedSeries {
    assert!(order >= 1, "order must be positive");
    let mut coeffs = Vec::with_capacity(order);
    let mut c = Complex64::new(1.0, 0.0);
    coeffs.push(c);
    for m in 1..order {
        c = c * a / m as f64;
        coeffs.push(c);
    }
    TruncatedSeries::new(0, coeffs)
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.norm() == 0.0 {
                continue;
            }
            write!(f, "({c})*z^{} + ", self.offset + i)?;
        }
        write!(f, "O(z^{})", self.order())
    }
}
