//! Coefficient problems for the class of f with zf'/f ≺ ℘: Bell numbers,
//! extremal coefficients, Fekete–Szegő and Hankel functionals, the H₃(1)
//! rectangle maximization and a seeded stochastic audit.
//!
//! Carathéodory coefficients `p_k` below always refer to the function
//! `p = (1 + ω)/(1 − ω)` of the Schwarz map ω with `zf'/f = ℘(ω)`.

use crate::error::{contract, domain, Result};
use crate::series::{cardioid_series, PowerSeries};
use crate::solve::{maximize_1d, maximize_2d, MaxResult1, MaxResult2, Rect};
use crate::E;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Largest index for which Bell numbers stay exact in `f64` arithmetic downstream.
pub const BELL_MAX: usize = 20;

/// Bound for |H₃(1)| from the rectangle maximization.
pub const H3_RECTANGLE_BOUND: f64 = 0.150627;

/// Slack allowed when comparing sampled values with closed-form bounds.
pub const AUDIT_SLACK: f64 = 1e-9;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BellTable {
    pub values: Vec<u64>,
}

impl BellTable {
    pub fn get(&self, n: usize) -> Option<u64> {
        self.values.get(n).copied()
    }

    /// `B_n / n!`.
    pub fn ratio(&self, n: usize) -> Option<f64> {
        let b = self.get(n)? as f64;
        Some(b / (1..=n).map(|k| k as f64).product::<f64>())
    }
}

/// `B₀ … B_{n_max}` from `B_{n+1} = Σ C(n,k) B_k`.
pub fn bell_numbers(n_max: usize) -> Result<BellTable> {
    if n_max > BELL_MAX {
        return domain(format!("Bell table limited to n ≤ {BELL_MAX}, got {n_max}"));
    }
    let mut values = vec![1u64];
    let mut row = vec![1u64]; // binomial row C(n, ·)
    for n in 0..n_max {
        let next: u64 = row.iter().zip(&values).map(|(c, b)| c * b).sum();
        values.push(next);
        let mut new_row = vec![1u64; n + 2];
        for k in 1..=n {
            new_row[k] = row[k - 1] + row[k];
        }
        row = new_row;
    }
    Ok(BellTable { values })
}

/// Taylor coefficients of `f_n(z) = z·exp((e^{zⁿ} − 1)/n)` through `z^order`,
/// obtained from `zf'/f = ℘(zⁿ)`.
pub fn extremal_coeffs(n: usize, order: usize) -> Result<PowerSeries> {
    if n == 0 {
        return domain("fold index must be at least 1");
    }
    if order < n + 1 {
        return domain(format!("order {order} too small for fold index {n}"));
    }
    let base = cardioid_series((order - 1).div_ceil(n));
    base.substitute_power(n)?
        .truncate(order - 1)?
        .from_caratheodory()
}

/// `[b₁, …, b₅]` from `[p₁, …, p₄]`.
pub fn caratheodory_to_coeffs(p: [Complex64; 4]) -> [Complex64; 5] {
    let [p1, p2, p3, p4] = p;
    let b2 = p1 / 2.0;
    let b3 = (p2 + p1 * p1 / 2.0) / 4.0;
    let b4 = (p3 + 0.75 * p1 * p2) / 6.0;
    let b5 =
        (p1.powi(4) / 48.0 + p2 * p2 / 4.0 + 2.0 * p1 * p3 / 3.0 - p1 * p1 * p2 / 8.0 + p4) / 8.0;
    [ONE, b2, b3, b4, b5]
}

/// Series route for the same map: `f` from `zf'/f = ℘((p − 1)/(p + 1))` with
/// `p = 1 + Σ p_k z^k` truncated at the length of `p`.
pub fn coeffs_from_caratheodory_series(p: &[Complex64]) -> Result<PowerSeries> {
    let n = p.len();
    if n == 0 {
        return contract("need at least one Carathéodory coefficient");
    }
    let mut num = vec![ZERO; n + 1];
    let mut den = vec![ZERO; n + 1];
    den[0] = c(2.0);
    for (k, pk) in p.iter().enumerate() {
        num[k + 1] = *pk;
        den[k + 1] = *pk;
    }
    let omega = PowerSeries::new(num).div(&PowerSeries::new(den))?;
    cardioid_series(n).compose(&omega)?.from_caratheodory()
}

/// A bound together with the value of its extremal witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FunctionalResult {
    pub value: f64,
    pub bound: f64,
    pub attained_at: String,
}

impl FunctionalResult {
    pub fn within_bound(&self) -> bool {
        self.value <= self.bound + AUDIT_SLACK
    }
}

/// `max |b₃ − μ b₂²|` over the class: `½·max(1, 2|μ − 1|)`.
pub fn fekete_szego_bound(mu: f64) -> f64 {
    0.5 * f64::max(1.0, 2.0 * (mu - 1.0).abs())
}

/// Evaluates `|b₃ − μ b₂²|` on the witness for `μ`: f₂ on `[½, 3/2]`, f₁ elsewhere.
pub fn fekete_szego_witness(mu: f64) -> Result<FunctionalResult> {
    let (n, name) = if (0.5..=1.5).contains(&mu) {
        (2, "f2")
    } else {
        (1, "f1")
    };
    let f = extremal_coeffs(n, 3)?;
    let value = (f.coeff(3) - mu * f.coeff(2) * f.coeff(2)).norm();
    Ok(FunctionalResult {
        value,
        bound: fekete_szego_bound(mu),
        attained_at: name.into(),
    })
}

/// `max |A₃ − μ A₂²|` for the inverse function, from `A₃ − μA₂² = (2 − μ)b₂² − b₃`.
pub fn inverse_fs_bound(mu: f64) -> f64 {
    fekete_szego_bound(2.0 - mu)
}

/// The piecewise form `3 − μ`, `½`, `μ − 3` (breakpoints 5/2 and 7/2), which is
/// `fekete_szego_bound(μ − 2)`.
pub fn inverse_fs_bound_piecewise(mu: f64) -> f64 {
    if mu <= 2.5 {
        3.0 - mu
    } else if mu <= 3.5 {
        0.5
    } else {
        mu - 3.0
    }
}

/// Determinant of the `q × q` Hankel matrix `[b_{n+i+j}]`, with `b₁ = 1`.
pub fn hankel(coeffs: &PowerSeries, q: usize, n: usize) -> Result<Complex64> {
    if q == 0 || n == 0 {
        return contract("Hankel size and start index must be positive");
    }
    let last = n + 2 * (q - 1);
    if coeffs.order() < last {
        return contract(format!(
            "H_{q}({n}) needs coefficients through b_{last}, series has order {}",
            coeffs.order()
        ));
    }
    let b = |k: usize| if k == 1 { ONE } else { coeffs.coeff(k) };
    let mut m: Vec<Vec<Complex64>> = (0..q)
        .map(|i| (0..q).map(|j| b(n + i + j)).collect())
        .collect();
    Ok(determinant(&mut m))
}

fn determinant(m: &mut [Vec<Complex64>]) -> Complex64 {
    let q = m.len();
    let mut det = ONE;
    for col in 0..q {
        let pivot = (col..q)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .expect("non-empty");
        if m[pivot][col] == ZERO {
            return ZERO;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..q {
            let factor = m[row][col] / m[col][col];
            for k in col..q {
                let v = m[col][k];
                m[row][k] -= factor * v;
            }
        }
    }
    det
}

/// `H₃(1) = b₃(b₂b₄ − b₃²) − b₄(b₄ − b₂b₃) + b₅(b₃ − b₂²)`.
pub fn h3_expanded(b: &[Complex64; 5]) -> Complex64 {
    let [_, b2, b3, b4, b5] = *b;
    b3 * (b2 * b4 - b3 * b3) - b4 * (b4 - b2 * b3) + b5 * (b3 - b2 * b2)
}

/// Which of the two parameter regions of the `|c₃ + μc₁c₂ + νc₁³|` estimate holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PsiRegion {
    D8,
    D9,
}

pub fn psi_region(mu: f64, nu: f64) -> Option<PsiRegion> {
    let m = mu.abs();
    let lower = -2.0 / 3.0 * (m + 1.0);
    if nu < lower {
        return None;
    }
    if (0.5..=2.0).contains(&m) && nu <= 4.0 / 27.0 * (m + 1.0).powi(3) - (m + 1.0) {
        return Some(PsiRegion::D8);
    }
    if m >= 2.0 && nu <= 2.0 * m * (m + 1.0) / (mu * mu + 2.0 * m + 4.0) {
        return Some(PsiRegion::D9);
    }
    None
}

/// Sharp bound for `|c₃ + μc₁c₂ + νc₁³|` over Schwarz coefficients, on D₈ ∪ D₉ only.
pub fn schwarz_cubic_bound(mu: f64, nu: f64) -> Result<f64> {
    if psi_region(mu, nu).is_none() {
        return domain(format!("(μ, ν) = ({mu}, {nu}) lies outside D8 ∪ D9"));
    }
    let m = mu.abs() + 1.0;
    Ok(2.0 / 3.0 * m * (m / (3.0 * (1.0 + nu + mu.abs()))).sqrt())
}

/// Extremal Schwarz map parameter `√((|μ|+1)/(3(1+ν+|μ|)))` for the D₈/D₉ estimate.
fn psi_extremal_parameter(mu: f64, nu: f64) -> f64 {
    ((mu.abs() + 1.0) / (3.0 * (1.0 + nu + mu.abs()))).sqrt()
}

/// Series of the Schwarz map `z(s − z)/(1 − sz)` through `order`.
pub fn schwarz_blaschke(s: f64, order: usize) -> PowerSeries {
    // z(s − z)·Σ (sz)^k
    PowerSeries::from_fn(order, |k| match k {
        0 => ZERO,
        1 => c(s),
        _ => c(s.powi(k as i32) - s.powi(k as i32 - 2)),
    })
}

/// f with `zf'/f = ℘(ω)` for a given Schwarz series ω.
pub fn coeffs_from_schwarz(omega: &PowerSeries) -> Result<PowerSeries> {
    cardioid_series(omega.order())
        .compose(omega)?
        .from_caratheodory()
}

/// `max |b₂b₃ − b₄| = (2/3)√(2/5)`, evaluated on the Schwarz-map witness.
pub fn b2b3_minus_b4() -> Result<FunctionalResult> {
    let bound = schwarz_cubic_bound(2.0, -0.5)? / 3.0;
    let s = psi_extremal_parameter(2.0, -0.5);
    let f = coeffs_from_schwarz(&schwarz_blaschke(s, 3))?;
    let value = (f.coeff(2) * f.coeff(3) - f.coeff(4)).norm();
    Ok(FunctionalResult {
        value,
        bound,
        attained_at: format!("Schwarz map z(s - z)/(1 - sz), s = sqrt(2/5) = {s:.12}"),
    })
}

/// `p₂, p₃, p₄` from `p₁ ∈ [0, 2]` and ζ, η, ξ in the closed unit disk.
pub fn caratheodory_tower(
    p1: f64,
    zeta: Complex64,
    eta: Complex64,
    xi: Complex64,
) -> Result<[Complex64; 4]> {
    check_tower(p1, zeta, eta, xi)?;
    let p = c(p1);
    let t = 4.0 - p1 * p1;
    let z2 = 1.0 - zeta.norm_sqr();
    let p2 = (p * p + zeta * t) / 2.0;
    let p3 = (p.powi(3) + 2.0 * p * zeta * t - p * zeta * zeta * t + 2.0 * t * z2 * eta) / 4.0;
    let p4 = (p.powi(4) + t * zeta * (p * p * (zeta * zeta - 3.0 * zeta + 3.0) + 4.0 * zeta)
        - 4.0
            * t
            * z2
            * (p * (zeta - 1.0) * eta + zeta.conj() * eta * eta - (1.0 - eta.norm_sqr()) * xi))
        / 8.0;
    Ok([p, p2, p3, p4])
}

fn check_tower(p1: f64, zeta: Complex64, eta: Complex64, xi: Complex64) -> Result<()> {
    const SLACK: f64 = 1e-12;
    if !(-SLACK..=2.0 + SLACK).contains(&p1) {
        return domain(format!("p1 = {p1} outside [0, 2]"));
    }
    for (name, v) in [("zeta", zeta), ("eta", eta), ("xi", xi)] {
        if !(v.norm() <= 1.0 + SLACK) {
            return domain(format!("|{name}| = {} exceeds 1", v.norm()));
        }
    }
    Ok(())
}

/// H₃(1) along the direct route: tower, coefficients, determinant.
pub fn h3_direct(p1: f64, zeta: Complex64, eta: Complex64, xi: Complex64) -> Result<Complex64> {
    let b = caratheodory_to_coeffs(caratheodory_tower(p1, zeta, eta, xi)?);
    let series = PowerSeries::new(std::iter::once(ZERO).chain(b).collect());
    hankel(&series, 3, 1)
}

/// The four Υ coefficients of `9216·H₃(1) = Υ₁ + Υ₂η + Υ₃η² + Υ₄ξ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Upsilon {
    pub u1: Complex64,
    pub u2: Complex64,
    pub u3: Complex64,
    pub u4: Complex64,
}

pub fn upsilon(p1: f64, zeta: Complex64, eta: Complex64) -> Upsilon {
    let p = p1;
    let z = zeta;
    let t = 4.0 - p * p;
    let a = 1.0 - z.norm_sqr();
    let p2 = p * p;
    let u1 = -4.0 * p.powi(6)
        + t * (t
            * (-25.0 * p2 * z * z - 5.0 * p2 * z.powi(3)
                + 2.0 * p2 * z.powi(4)
                + 36.0 * z.powi(3))
            + 5.0 * p.powi(4) * z
            - 16.0 * p.powi(4) * z * z);
    let u2 = t * a * (t * (-8.0 * p * z - 8.0 * p * z * z) + 32.0 * p.powi(3));
    let u3 = c(-t * t * a * (64.0 + 8.0 * z.norm_sqr()));
    let u4 = 72.0 * t * t * a * (1.0 - eta.norm_sqr()) * z;
    Upsilon { u1, u2, u3, u4 }
}

/// H₃(1) from the Υ expansion.
pub fn h3_components(p1: f64, zeta: Complex64, eta: Complex64, xi: Complex64) -> Result<Complex64> {
    check_tower(p1, zeta, eta, xi)?;
    let u = upsilon(p1, zeta, eta);
    Ok((u.u1 + u.u2 * eta + u.u3 * eta * eta + u.u4 * xi) / 9216.0)
}

/// A point of the rectangle maximization: `x = |ζ|`, `y = |η|`, `t = 4 − p²`,
/// with the majorant pieces `f₁ … f₄` of the rectangle bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct H3Scan {
    pub p: f64,
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl H3Scan {
    pub fn new(p: f64, x: f64, y: f64) -> Self {
        H3Scan {
            p,
            x,
            y,
            t: 4.0 - p * p,
        }
    }

    pub fn f1(&self) -> f64 {
        let (p, x, t) = (self.p, self.x, self.t);
        let p2 = p * p;
        4.0 * p.powi(6)
            + t * (t
                * (25.0 * p2 * x * x
                    + 19.0 * p2 * x.powi(3)
                    + 2.0 * p2 * x.powi(4)
                    + 36.0 * x.powi(3))
                + 5.0 * p.powi(4) * x
                + 16.0 * p.powi(4) * x * x
                + 24.0 * p2 * x.powi(3))
    }

    pub fn f2(&self) -> f64 {
        let (p, x, t) = (self.p, self.x, self.t);
        t * (1.0 - x * x) * (t * (80.0 * p * x + 64.0 * p * x * x) + 32.0 * p.powi(3))
    }

    pub fn f3(&self) -> f64 {
        let (x, t) = (self.x, self.t);
        t * t * (1.0 - x * x) * (64.0 + 8.0 * x * x)
    }

    pub fn f4(&self) -> f64 {
        let (x, t) = (self.x, self.t);
        72.0 * t * t * x * (1.0 - x * x).powi(2)
    }

    /// `F = f₁ + f₂y + f₃y² + f₄`.
    pub fn big_f(&self) -> f64 {
        self.f1() + self.f2() * self.y + self.f3() * self.y * self.y + self.f4()
    }

    /// `G(p, x) = F(p, x, 1)`.
    pub fn big_g(&self) -> f64 {
        H3Scan::new(self.p, self.x, 1.0).big_f()
    }

    /// Triangle-inequality majorant of `9216·|H₃(1)|` built from the Υ coefficients
    /// with `|ζ| = x`, `|η| = y`, `|ξ| = 1`.
    pub fn corrected_majorant(&self) -> f64 {
        let (p, x, y, t) = (self.p, self.x, self.y, self.t);
        let p2 = p * p;
        let a = 1.0 - x * x;
        let m1 = 4.0 * p.powi(6)
            + t * (t
                * (25.0 * p2 * x * x
                    + 5.0 * p2 * x.powi(3)
                    + 2.0 * p2 * x.powi(4)
                    + 36.0 * x.powi(3))
                + 5.0 * p.powi(4) * x
                + 16.0 * p.powi(4) * x * x);
        let m2 = t * a * (t * (8.0 * p * x + 8.0 * p * x * x) + 32.0 * p.powi(3));
        let m3 = t * t * a * (64.0 + 8.0 * x * x);
        let m4 = 72.0 * t * t * a * x;
        m1 + m2 * y + m3 * y * y + m4 * (1.0 - y * y)
    }
}

pub fn g1(p: f64) -> f64 {
    1024.0 - 512.0 * p.powi(2) + 128.0 * p.powi(3) + 64.0 * p.powi(4) - 32.0 * p.powi(5)
        + 4.0 * p.powi(6)
}

pub fn g2(p: f64) -> f64 {
    576.0 + 544.0 * p.powi(2) - 272.0 * p.powi(4) + 29.0 * p.powi(6)
}

pub fn g3(x: f64) -> f64 {
    1024.0 - 896.0 * x * x + 576.0 * x.powi(3) - 128.0 * x.powi(4)
}

/// Closed-form maximizer `2√((68 − 7√34)/87)` of g₂ on [0, 2].
pub fn g2_maximizer() -> f64 {
    2.0 * ((68.0 - 7.0 * 34f64.sqrt()) / 87.0).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeMax {
    pub location: f64,
    pub value: f64,
}

impl From<MaxResult1> for EdgeMax {
    fn from(m: MaxResult1) -> Self {
        EdgeMax {
            location: m.location,
            value: m.value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlaneMax {
    pub p: f64,
    pub x: f64,
    pub value: f64,
}

impl From<MaxResult2> for PlaneMax {
    fn from(m: MaxResult2) -> Self {
        PlaneMax {
            p: m.location.0,
            x: m.location.1,
            value: m.value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct H3CaseReport {
    /// g₁ on [0, 2] (the edge x = 0).
    pub g1: EdgeMax,
    /// g₂ on [0, 2] (the edge x = 1).
    pub g2: EdgeMax,
    pub g2_closed_form: f64,
    /// g₃ on [0, 1].
    pub g3: EdgeMax,
    /// G itself on the edge p = 0; differs from g₃ by f₄(0, x) = 1152x(1 − x²)².
    pub g_on_p0: EdgeMax,
    /// G on the edge p = 2 (t = 0), constant 256.
    pub g_on_p2: f64,
    pub interior: PlaneMax,
    /// Maximum over the rectangle and y ∈ [0, 1] of the Υ-based majorant.
    pub corrected_majorant: PlaneMax,
    pub corrected_majorant_y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct H3Bound {
    pub bound: f64,
    pub case_report: H3CaseReport,
}

/// Maximizes G over [0, 2] × [0, 1] and reports the edge cases; `bound = max G / 9216`.
pub fn h3_upper_bound(grid: usize, refine_tol: f64) -> Result<H3Bound> {
    if grid < 64 {
        return contract("rectangle scan needs a grid of at least 64");
    }
    let g = |p: f64, x: f64| H3Scan::new(p, x, 1.0).big_g();
    let interior: PlaneMax =
        maximize_2d(g, Rect::new(0.0, 2.0, 0.0, 1.0), grid, refine_tol)?.into();
    let edge = |f: &dyn Fn(f64) -> f64, hi: f64| -> Result<EdgeMax> {
        Ok(maximize_1d(f, (0.0, hi), grid, refine_tol)?.into())
    };
    let (maj, y) = corrected_majorant_max(grid, refine_tol)?;
    Ok(H3Bound {
        bound: interior.value / 9216.0,
        case_report: H3CaseReport {
            g1: edge(&g1, 2.0)?,
            g2: edge(&g2, 2.0)?,
            g2_closed_form: g2_maximizer(),
            g3: edge(&g3, 1.0)?,
            g_on_p0: edge(&|x| g(0.0, x), 1.0)?,
            g_on_p2: g(2.0, 0.5),
            interior,
            corrected_majorant: maj,
            corrected_majorant_y: y,
        },
    })
}

/// Best y for the majorant, which is quadratic in y.
fn majorant_best_y(p: f64, x: f64) -> f64 {
    let s = |y| H3Scan::new(p, x, y).corrected_majorant();
    let (v0, v1, vh) = (s(0.0), s(1.0), s(0.5));
    // quadratic through y = 0, ½, 1
    let curv = 2.0 * (v0 + v1 - 2.0 * vh);
    let mut best = if v1 > v0 { 1.0 } else { 0.0 };
    if curv < 0.0 {
        let slope = v1 - v0 - curv / 2.0;
        let y = -slope / curv;
        if (0.0..=1.0).contains(&y) && s(y) > s(best) {
            best = y;
        }
    }
    best
}

fn corrected_majorant_max(grid: usize, refine_tol: f64) -> Result<(PlaneMax, f64)> {
    let f = |p: f64, x: f64| H3Scan::new(p, x, majorant_best_y(p, x)).corrected_majorant();
    let m: PlaneMax = maximize_2d(f, Rect::new(0.0, 2.0, 0.0, 1.0), grid, refine_tol)?.into();
    Ok((m, majorant_best_y(m.p, m.x)))
}

/// H₃(1) bounds for 3-fold and 2-fold symmetric members, with the fold transform
/// of f₁ as witness.
pub fn nfold_h3(fold: usize) -> Result<FunctionalResult> {
    let bound = match fold {
        3 => 1.0 / 9.0,
        2 => 1.0 / 16.0,
        _ => return domain(format!("fold must be 2 or 3, got {fold}")),
    };
    let witness = extremal_coeffs(1, 3)?.fold_transform(fold)?;
    let value = hankel(&witness, 3, 1)?.norm();
    Ok(FunctionalResult {
        value,
        bound,
        attained_at: format!("(f1(z^{fold}))^(1/{fold})"),
    })
}

/// The case function `(3p³ − 4p² + 4p)/256` bounding the 2-fold H₃(1);
/// its maximum on [0, 2] is 1/16 at p = 2.
pub fn nfold2_case_function(p: f64) -> f64 {
    (3.0 * p.powi(3) - 4.0 * p * p + 4.0 * p) / 256.0
}

/// `|α₃(α₅ − α₃²)|` for the 2-fold transform of the member with tower data
/// `(p₁, ζ)` (η, ξ do not enter).
pub fn nfold2_h3_at(p1: f64, zeta: Complex64) -> Result<f64> {
    let b = caratheodory_to_coeffs(caratheodory_tower(p1, zeta, ZERO, ZERO)?);
    let f = PowerSeries::new(vec![ZERO, ONE, b[1], b[2]]);
    Ok(hankel(&f.fold_transform(2)?, 3, 1)?.norm())
}

/// Largest value of the 2-fold H₃(1) over the class: `√6/36` at `p₁ = √(8/3)`, ζ = 1.
pub fn nfold2_class_maximum() -> Result<FunctionalResult> {
    let p1 = (8.0f64 / 3.0).sqrt();
    Ok(FunctionalResult {
        value: nfold2_h3_at(p1, ONE)?,
        bound: 6f64.sqrt() / 36.0,
        attained_at: format!("2-fold transform at p1 = sqrt(8/3) = {p1:.12}, zeta = 1"),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
    /// `(k, |b_k|, √((α−1)/(k²−α)))` for k ≥ 4.
    pub coefficient_bounds: Vec<(usize, f64, f64)>,
}

/// `Σ_{k≥2}(k² − α)|b_k|² ≤ α − 1` with `α = (1 + e)²`.
pub fn sum_inequality_check(coeffs: &PowerSeries) -> Result<SumCheck> {
    if coeffs.order() < 8 {
        return contract(format!("sum check needs order ≥ 8, got {}", coeffs.order()));
    }
    if coeffs.coeff(0).norm() > 1e-12 || (coeffs.coeff(1) - ONE).norm() > 1e-12 {
        return domain("sum check needs a normalized series");
    }
    let alpha = (1.0 + E).powi(2);
    let lhs = (2..=coeffs.order())
        .map(|k| ((k * k) as f64 - alpha) * coeffs.coeff(k).norm_sqr())
        .sum::<f64>();
    let rhs = alpha - 1.0;
    let coefficient_bounds = (4..=coeffs.order())
        .map(|k| {
            (
                k,
                coeffs.coeff(k).norm(),
                ((alpha - 1.0) / ((k * k) as f64 - alpha)).sqrt(),
            )
        })
        .collect();
    Ok(SumCheck {
        lhs,
        rhs,
        ok: lhs <= rhs,
        coefficient_bounds,
    })
}

/// Ingredient bounds of the triangle-inequality estimate for |H₃(1)|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleIngredients {
    pub b3: f64,
    pub h2_2: f64,
    pub b4: f64,
    pub b2b3_minus_b4: f64,
    pub b5: f64,
    pub fekete_szego_1: f64,
}

pub fn triangle_ingredients() -> Result<TriangleIngredients> {
    let f1 = extremal_coeffs(1, 5)?;
    let f2 = extremal_coeffs(2, 5)?;
    Ok(TriangleIngredients {
        b3: fekete_szego_bound(0.0),
        h2_2: hankel(&f2, 2, 2)?.norm(),
        b4: f1.coeff(4).norm(),
        b2b3_minus_b4: b2b3_minus_b4()?.bound,
        b5: f1.coeff(5).norm(),
        fekete_szego_1: fekete_szego_bound(1.0),
    })
}

/// `|b₃||H₂(2)| + |b₄||b₂b₃ − b₄| + |b₅||b₃ − b₂²|` with each factor at its bound.
pub fn h3_triangle_bound() -> Result<f64> {
    let i = triangle_ingredients()?;
    Ok(i.b3 * i.h2_2 + i.b4 * i.b2b3_minus_b4 + i.b5 * i.fekete_szego_1)
}

/// One random admissible point of the tower parametrization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TowerSample {
    pub p1: f64,
    pub zeta: Complex64,
    pub eta: Complex64,
    pub xi: Complex64,
}

fn unit_disk_point(rng: &mut impl Rng) -> Complex64 {
    let r = rng.random::<f64>().sqrt();
    Complex64::from_polar(r, 2.0 * PI * rng.random::<f64>())
}

impl TowerSample {
    pub fn random(rng: &mut impl Rng) -> Self {
        TowerSample {
            p1: 2.0 * rng.random::<f64>(),
            zeta: unit_disk_point(rng),
            eta: unit_disk_point(rng),
            xi: unit_disk_point(rng),
        }
    }

    pub fn caratheodory(&self) -> [Complex64; 4] {
        caratheodory_tower(self.p1, self.zeta, self.eta, self.xi)
            .expect("sampled inside the domain")
    }

    pub fn coeffs(&self) -> [Complex64; 5] {
        caratheodory_to_coeffs(self.caratheodory())
    }
}

/// `n` seeded tower samples.
pub fn tower_samples(seed: u64, n: usize) -> Vec<TowerSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| TowerSample::random(&mut rng)).collect()
}

/// Herglotz mixture `Σ w_j (1 + u_j z)/(1 − u_j z)/Σw` with 1 to 3 atoms; returns
/// `p₁ … p_order`.
pub fn random_herglotz(rng: &mut impl Rng, order: usize) -> Vec<Complex64> {
    let atoms = 1 + (rng.random::<f64>() * 3.0) as usize;
    let mut weights: Vec<f64> = (0..atoms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);
    let points: Vec<Complex64> = (0..atoms)
        .map(|_| {
            let r = if rng.random::<f64>() < 0.5 {
                1.0
            } else {
                rng.random::<f64>().sqrt()
            };
            Complex64::from_polar(r, 2.0 * PI * rng.random::<f64>())
        })
        .collect();
    (1..=order)
        .map(|k| {
            weights
                .iter()
                .zip(&points)
                .map(|(w, u)| 2.0 * w * u.powi(k as i32))
                .sum()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditLine {
    pub functional: String,
    pub observed_max: f64,
    pub bound: f64,
    pub margin: f64,
    pub ok: bool,
}

impl AuditLine {
    fn new(functional: &str, observed_max: f64, bound: f64) -> Self {
        AuditLine {
            functional: functional.into(),
            observed_max,
            bound,
            margin: bound - observed_max,
            ok: observed_max <= bound + AUDIT_SLACK,
        }
    }
}

/// Monitor line for `|b_k| ≤ B_{k−1}/(k−1)!`; violations are findings, not failures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureLine {
    pub k: usize,
    pub observed_max: f64,
    pub conjectured_bound: f64,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub seed: u64,
    pub samples: usize,
    pub mixture_samples: usize,
    pub lines: Vec<AuditLine>,
    pub conjecture: Vec<ConjectureLine>,
    pub ok: bool,
}

/// Highest coefficient index watched by the conjecture monitor.
pub const CONJECTURE_ORDER: usize = 8;

/// Samples tower points, records the largest value of each functional against its
/// bound, and runs the Bell-ratio monitor over tower samples and Herglotz mixtures.
pub fn stochastic_audit(seed: u64, samples: usize) -> Result<AuditReport> {
    if samples == 0 {
        return contract("audit needs at least one sample");
    }
    let bell = bell_numbers(CONJECTURE_ORDER)?;
    let mut maxima = [0.0f64; 13];
    let mut conj = vec![(0.0f64, 0usize); CONJECTURE_ORDER + 1];
    let watch = |k: usize, v: f64, conj: &mut Vec<(f64, usize)>| {
        let bound = bell.ratio(k - 1).expect("k ≤ 8");
        conj[k].0 = conj[k].0.max(v);
        if v > bound + AUDIT_SLACK {
            conj[k].1 += 1;
        }
    };
    for s in tower_samples(seed, samples) {
        let b = s.coeffs();
        let [_, b2, b3, b4, b5] = b;
        let f = PowerSeries::new(vec![ZERO, ONE, b2, b3, b4, b5]);
        let inv = f.reversion()?;
        let d = f.log_coeffs()?;
        let values = [
            b2.norm(),
            b3.norm(),
            b4.norm(),
            b5.norm(),
            (b2 * b4 - b3 * b3).norm(),
            (b2 * b3 - b4).norm(),
            (b3 - b2 * b2).norm(),
            h3_expanded(&b).norm(),
            inv.coeff(4).norm(),
            d.coeff(1).norm(),
            d.coeff(2).norm(),
            d.coeff(3).norm(),
            d.coeff(4).norm(),
        ];
        for (m, v) in maxima.iter_mut().zip(values) {
            *m = m.max(v);
        }
        for (k, bk) in [(2, b2), (3, b3), (4, b4), (5, b5)] {
            watch(k, bk.norm(), &mut conj);
        }
    }
    let mixture_samples = samples / 10;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for _ in 0..mixture_samples {
        let p = random_herglotz(&mut rng, CONJECTURE_ORDER - 1);
        let f = coeffs_from_caratheodory_series(&p)?;
        for k in 2..=CONJECTURE_ORDER {
            watch(k, f.coeff(k).norm(), &mut conj);
        }
    }

    let b2b3 = b2b3_minus_b4()?.bound;
    let bounds = [
        ("|b2|", 1.0),
        ("|b3|", 1.0),
        ("|b4|", 5.0 / 6.0),
        ("|b5|", 5.0 / 8.0),
        ("|H2(2)|", 0.25),
        ("|b2 b3 - b4|", b2b3),
        ("|b3 - b2^2|", 0.5),
        ("|H3(1)|", H3_RECTANGLE_BOUND + 1e-6),
        ("|A4|", 5.0 / 6.0),
        ("|d1|", 0.5),
        ("|d2|", 0.5),
        ("|d3|", 0.5),
        ("|d4|", 0.5),
    ];
    let lines: Vec<AuditLine> = bounds
        .iter()
        .zip(maxima)
        .map(|((name, bound), m)| AuditLine::new(name, m, *bound))
        .collect();
    let conjecture = (2..=CONJECTURE_ORDER)
        .map(|k| ConjectureLine {
            k,
            observed_max: conj[k].0,
            conjectured_bound: bell.ratio(k - 1).expect("k ≤ 8"),
            violations: conj[k].1,
        })
        .collect();
    let ok = lines.iter().all(|l| l.ok);
    Ok(AuditReport {
        seed,
        samples,
        mixture_samples,
        lines,
        conjecture,
        ok,
    })
}

/// Witness values for the bounds checked by the audit, keyed like [`AuditLine`].
pub fn audit_witnesses() -> Result<Vec<FunctionalResult>> {
    let f1 = extremal_coeffs(1, 5)?;
    let f2 = extremal_coeffs(2, 5)?;
    let b = |f: &PowerSeries, k| f.coeff(k);
    let mut out = vec![
        FunctionalResult {
            value: b(&f1, 2).norm(),
            bound: 1.0,
            attained_at: "f1".into(),
        },
        FunctionalResult {
            value: b(&f1, 3).norm(),
            bound: 1.0,
            attained_at: "f1".into(),
        },
        FunctionalResult {
            value: b(&f1, 4).norm(),
            bound: 5.0 / 6.0,
            attained_at: "f1".into(),
        },
        FunctionalResult {
            value: b(&f1, 5).norm(),
            bound: 5.0 / 8.0,
            attained_at: "f1".into(),
        },
        FunctionalResult {
            value: hankel(&f2, 2, 2)?.norm(),
            bound: 0.25,
            attained_at: "f2".into(),
        },
        b2b3_minus_b4()?,
    ];
    let fs = fekete_szego_witness(1.0)?;
    out.push(fs);
    Ok(out)
}
