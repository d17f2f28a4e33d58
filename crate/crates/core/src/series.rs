//! Truncated complex Taylor series.
//!
//! A [`PowerSeries`] of order `N` stores `c₀ … c_N` and every operation returns the
//! exact truncation of the formal result through its own order. Operations that
//! lose a degree (division by `z`) return a series of order `N − 1`.

use crate::error::{contract, domain, Result};
use num_complex::Complex64;
use std::fmt;

/// Default truncation degree.
pub const DEFAULT_ORDER: usize = 16;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Tolerance used to decide whether a coefficient "is" 0 or 1 in preconditions.
const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl PowerSeries {
    /// Builds a series from `c₀ … c_N`. Panics on an empty vector.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c0");
        PowerSeries { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![ZERO; order + 1],
        }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// The identity series `z`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, ONE, order)
    }

    /// `c·z^k`, truncated (zero when `k > order`).
    pub fn monomial(k: usize, c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Taylor coefficients of an analytic function given as a closure on its
    /// coefficient index.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `e^z`.
    pub fn exp_z(order: usize) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        let mut term = 1.0;
        for k in 0..=order {
            if k > 0 {
                term /= k as f64;
            }
            c.push(Complex64::new(term, 0.0));
        }
        PowerSeries { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; panics when `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Keeps `c₀ … c_order`. Truncating upward is a contract violation.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return contract(format!(
                "cannot extend a series of order {} to order {order}",
                self.order()
            ));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn same_order(&self, other: &Self, op: &str) -> Result<()> {
        if self.order() != other.order() {
            return contract(format!(
                "{op}: orders differ ({} vs {})",
                self.order(),
                other.order()
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "add")?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "sub")?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: Complex64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Cauchy product through the shared order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "mul")?;
        let n = self.order();
        let mut out = vec![ZERO; n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == ZERO {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `1/a`; requires `a₀ ≠ 0`.
    pub fn recip(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() == 0.0 {
            return domain("reciprocal of a series with zero constant term");
        }
        let n = self.order();
        let mut out = vec![ZERO; n + 1];
        out[0] = a0.inv();
        for k in 1..=n {
            let mut s = ZERO;
            for j in 1..=k {
                s += self.coeffs[j] * out[k - j];
            }
            out[k] = -s / a0;
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_order(other, "div")?;
        self.mul(&other.recip()?)
    }

    /// `exp(a)` via `E' = a'E`; requires `a₀ = 0`.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0].norm() > NORMALIZATION_TOL {
            return domain("exp of a series needs a zero constant term");
        }
        let n = self.order();
        let mut e = vec![ZERO; n + 1];
        e[0] = ONE;
        for m in 1..=n {
            let mut s = ZERO;
            for k in 1..=m {
                s += self.coeffs[k] * (k as f64) * e[m - k];
            }
            e[m] = s / (m as f64);
        }
        Ok(PowerSeries { coeffs: e })
    }

    /// `log(g)` via `L' = g'/g`; requires `g₀ = 1`.
    pub fn ln(&self) -> Result<Self> {
        if (self.coeffs[0] - ONE).norm() > NORMALIZATION_TOL {
            return domain("log of a series needs constant term 1");
        }
        let n = self.order();
        let mut l = vec![ZERO; n + 1];
        for m in 1..=n {
            let mut s = ZERO;
            for k in 1..m {
                s += (k as f64) * l[k] * self.coeffs[m - k];
            }
            l[m] = self.coeffs[m] - s / (m as f64);
        }
        Ok(PowerSeries { coeffs: l })
    }

    /// `g^α` for real `α` and `g₀ = 1`, principal branch.
    pub fn pow_unit(&self, alpha: f64) -> Result<Self> {
        self.ln()?.scale(Complex64::new(alpha, 0.0)).exp()
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        PowerSeries {
            coeffs: (1..=n).map(|k| self.coeffs[k] * k as f64).collect(),
        }
    }

    /// `∫₀^z`, truncated to the same order (the top coefficient is dropped).
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut out = vec![ZERO; n + 1];
        for k in 1..=n {
            out[k] = self.coeffs[k - 1] / k as f64;
        }
        PowerSeries { coeffs: out }
    }

    /// `z·a` as a series of order `N + 1`.
    pub fn mul_z(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(ZERO);
        c.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs: c }
    }

    /// `a/z` as a series of order `N − 1`; requires `a₀ = 0` and `N ≥ 1`.
    pub fn div_z(&self) -> Result<Self> {
        if self.order() == 0 {
            return contract("cannot divide an order-0 series by z");
        }
        if self.coeffs[0].norm() > NORMALIZATION_TOL {
            return domain("division by z needs a zero constant term");
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `a(z^m)` as a series of order `m·N`.
    pub fn substitute_power(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return contract("substitution power must be positive");
        }
        let n = self.order();
        let mut out = vec![ZERO; m * n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[m * k] = *c;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Evaluates the truncated polynomial at `z` (Horner).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }

    /// `a ∘ w` for `w₀ = 0`, through the shared order (Horner in the series ring).
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.same_order(inner, "compose")?;
        if inner.coeffs[0].norm() > NORMALIZATION_TOL {
            return domain("inner series of a composition needs a zero constant term");
        }
        let n = self.order();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    fn check_normalized(&self, op: &str) -> Result<()> {
        if self.order() < 1
            || self.coeffs[0].norm() > NORMALIZATION_TOL
            || (self.coeffs[1] - ONE).norm() > NORMALIZATION_TOL
        {
            return domain(format!("{op}: series must be normalized (f(0)=0, f'(0)=1)"));
        }
        Ok(())
    }

    /// `z f'(z)/f(z)` for normalized `f`; the result has order `N − 1`.
    pub fn log_derivative(&self) -> Result<Self> {
        self.check_normalized("log_derivative")?;
        let g = self.div_z()?;
        let dg = g.derivative();
        if g.order() == 0 {
            return Ok(Self::one(0));
        }
        // z f'/f = 1 + z g'/g with f = z g
        let ratio = dg.mul(&g.truncate(dg.order())?.recip()?)?;
        let mut out = ratio.mul_z();
        out.coeffs[0] += ONE;
        Ok(out)
    }

    /// `f(z) = z·exp(∫₀^z (p(t) − 1)/t dt)` for `p₀ = 1`; the result has order `N + 1`.
    pub fn from_caratheodory(&self) -> Result<Self> {
        if (self.coeffs[0] - ONE).norm() > NORMALIZATION_TOL {
            return domain("from_caratheodory needs p0 = 1");
        }
        let n = self.order();
        let mut q = vec![ZERO; n + 1];
        for k in 1..=n {
            q[k] = self.coeffs[k] / k as f64;
        }
        Ok(PowerSeries { coeffs: q }.exp()?.mul_z())
    }

    /// Compositional inverse of a normalized `f` through order `N`, by Lagrange
    /// inversion: `A_k = (1/k)[w^{k−1}] (z/f(z))^k`.
    pub fn reversion(&self) -> Result<Self> {
        self.check_normalized("reversion")?;
        let n = self.order();
        let h = self.div_z()?.recip()?;
        let mut out = vec![ZERO; n + 1];
        out[1] = ONE;
        let mut power = h.clone();
        for k in 2..=n {
            power = power.mul(&h)?;
            out[k] = power.coeffs[k - 1] / k as f64;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `d₁ … d_{N−1}` with `log(f/z) = 2Σ d_k z^k`, stored at indices `1 … N−1`
    /// of a series of order `N − 1` (index 0 holds 0).
    pub fn log_coeffs(&self) -> Result<Self> {
        self.check_normalized("log_coeffs")?;
        Ok(self.div_z()?.ln()?.scale(Complex64::new(0.5, 0.0)))
    }

    /// m-fold symmetrization `(f(z^m))^{1/m}` of a normalized `f`; order `m(N−1)+1`.
    pub fn fold_transform(&self, m: usize) -> Result<Self> {
        self.check_normalized("fold_transform")?;
        let g = self.div_z()?.substitute_power(m)?;
        Ok(g.pow_unit(1.0 / m as f64)?.mul_z())
    }
}

/// Free-function spellings of the core operations.
pub fn ps_mul(a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries> {
    a.mul(b)
}

pub fn ps_exp(a: &PowerSeries) -> Result<PowerSeries> {
    a.exp()
}

pub fn ps_log_derivative(f: &PowerSeries) -> Result<PowerSeries> {
    f.log_derivative()
}

pub fn ps_from_caratheodory(p: &PowerSeries) -> Result<PowerSeries> {
    p.from_caratheodory()
}

pub fn ps_reversion(f: &PowerSeries) -> Result<PowerSeries> {
    f.reversion()
}

pub fn ps_log_coeffs(f: &PowerSeries) -> Result<PowerSeries> {
    f.log_coeffs()
}

/// `℘(z) = 1 + z e^z` as a series of the given order.
pub fn cardioid_series(order: usize) -> PowerSeries {
    let mut factorial = 1.0;
    PowerSeries::from_fn(order, |k| {
        if k == 0 {
            return ONE;
        }
        if k > 1 {
            factorial *= (k - 1) as f64;
        }
        c_real(1.0 / factorial)
    })
}

fn c_real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn close(a: &PowerSeries, b: &[f64], tol: f64) {
        for (k, want) in b.iter().enumerate() {
            assert!(
                (a.coeff(k) - c(*want)).norm() < tol,
                "coefficient {k}: {} vs {want}",
                a.coeff(k)
            );
        }
    }

    #[test]
    fn difference_of_squares() {
        let a = PowerSeries::from_real(&[1.0, 1.0, 0.0, 0.0]);
        let b = PowerSeries::from_real(&[1.0, -1.0, 0.0, 0.0]);
        close(&a.mul(&b).unwrap(), &[1.0, 0.0, -1.0, 0.0], 1e-15);
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = PowerSeries::zero(3);
        let b = PowerSeries::zero(4);
        assert!(matches!(a.mul(&b), Err(crate::Error::Contract(_))));
    }

    #[test]
    fn exp_of_z() {
        let e = PowerSeries::identity(4).exp().unwrap();
        close(&e, &[1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0], 1e-15);
    }

    #[test]
    fn exp_rejects_constant_term() {
        assert!(PowerSeries::one(3).exp().is_err());
    }

    #[test]
    fn exp_of_exp_minus_one_gives_bell_ratios() {
        let mut a = PowerSeries::exp_z(5);
        a.coeffs[0] = ZERO;
        close(
            &a.exp().unwrap(),
            &[1.0, 1.0, 1.0, 5.0 / 6.0, 5.0 / 8.0, 13.0 / 30.0],
            1e-14,
        );
    }

    #[test]
    fn cardioid_series_coefficients() {
        close(&cardioid_series(4), &[1.0, 1.0, 1.0, 0.5, 1.0 / 6.0], 1e-15);
        assert_eq!(cardioid_series(0).order(), 0);
    }

    #[test]
    fn log_derivative_of_identity() {
        let f = PowerSeries::identity(6);
        let q = f.log_derivative().unwrap();
        assert_eq!(q.order(), 5);
        close(&q, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0], 1e-15);
    }

    #[test]
    fn log_derivative_of_koebe() {
        let f = PowerSeries::from_fn(8, |k| c(k as f64));
        close(
            &f.log_derivative().unwrap(),
            &[1.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0, 2.0],
            1e-12,
        );
    }

    #[test]
    fn log_derivative_rejects_unnormalized() {
        let f = PowerSeries::from_real(&[0.0, 2.0, 1.0]);
        assert!(f.log_derivative().is_err());
    }

    #[test]
    fn reversion_of_f1_low_coefficients() {
        let f1 = cardioid_series(8).from_caratheodory().unwrap();
        let g = f1.truncate(8).unwrap().reversion().unwrap();
        close(&g, &[0.0, 1.0, -1.0, 1.0, -5.0 / 6.0], 1e-13);
    }

    #[test]
    fn log_coeffs_of_z_over_one_minus_z() {
        let f = PowerSeries::from_fn(8, |k| if k == 0 { ZERO } else { ONE });
        let d = f.log_coeffs().unwrap();
        for k in 1..=d.order() {
            assert!((d.coeff(k) - c(1.0 / (2.0 * k as f64))).norm() < 1e-14);
        }
    }

    #[test]
    fn fold_transform_of_f1() {
        let f1 = cardioid_series(6).from_caratheodory().unwrap();
        let f2 = f1.fold_transform(2).unwrap();
        // z exp((e^{z²} − 1)/2) = z + z³/2 + (3/8) z⁵ + …
        close(&f2, &[0.0, 1.0, 0.0, 0.5, 0.0, 0.375], 1e-14);
    }

    #[test]
    fn compose_with_identity_is_noop() {
        let a = PowerSeries::from_real(&[1.0, 2.0, 3.0, 4.0]);
        let z = PowerSeries::identity(3);
        close(&a.compose(&z).unwrap(), &[1.0, 2.0, 3.0, 4.0], 1e-15);
    }

    #[test]
    fn recip_rejects_zero_constant() {
        assert!(PowerSeries::identity(3).recip().is_err());
    }
}
