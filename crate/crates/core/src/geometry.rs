//! Geometry of Ω = ℘(𝔻) for ℘(z) = 1 + z·e^z.
//!
//! Ω is starlike about 1 and its boundary has the polar form
//! `℘(e^{iθ}) − 1 = e^{cos θ} · e^{i(θ + sin θ)}`, with `ψ(θ) = θ + sin θ`
//! increasing from 0 to π on `[0, π]`. Membership, disks and extremal bounds all
//! go through that profile.

use crate::error::{domain, Result};
use crate::solve::{self, Bracket};
use crate::E;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

/// Tolerance used when a check must accept exact boundary contact.
pub const CLOSURE_TOL: f64 = 1e-9;

/// Left end of the real trace of Ω.
pub fn left_vertex() -> f64 {
    1.0 - 1.0 / E
}

/// Right end of the real trace of Ω.
pub fn right_vertex() -> f64 {
    1.0 + E
}

/// ℘(z) = 1 + z·e^z.
pub fn cardioid(z: Complex64) -> Complex64 {
    1.0 + z * z.exp()
}

/// ℘(e^{iθ}).
pub fn boundary_point(theta: f64) -> Complex64 {
    let rho = theta.cos().exp();
    let psi = polar_angle(theta);
    Complex64::new(1.0 + rho * psi.cos(), rho * psi.sin())
}

/// ψ(θ) = θ + sin θ, the argument of ℘(e^{iθ}) − 1.
pub fn polar_angle(theta: f64) -> f64 {
    theta + theta.sin()
}

/// e^{cos θ}, the distance from 1 to ℘(e^{iθ}).
pub fn polar_radius(theta: f64) -> f64 {
    theta.cos().exp()
}

/// Inverse of ψ on `[0, π]`: the θ whose boundary point has argument `psi` about 1.
pub fn profile_angle(psi: f64) -> f64 {
    if psi <= 0.0 {
        return 0.0;
    }
    if psi >= PI {
        return PI;
    }
    let f = |t: f64| polar_angle(t) - psi;
    let b = Bracket {
        lo: 0.0,
        hi: PI,
        f_lo: -psi,
        f_hi: PI - psi,
    };
    solve::find_root(f, &b, solve::ROOT_TOL)
        .expect("ψ is monotone on [0, π], the bracket is always valid")
        .x
}

/// Signed radial excess `|w − 1| − e^{cos θ*}` of `w` over the boundary along the
/// ray from 1 through `w`. Negative inside Ω, positive outside, +∞ for
/// non-finite `w`.
pub fn radial_excess(w: Complex64) -> f64 {
    if !w.is_finite() {
        return f64::INFINITY;
    }
    let d = w - 1.0;
    let r = d.norm();
    if r == 0.0 {
        return -polar_radius(0.0).min(polar_radius(PI));
    }
    let theta = profile_angle(d.im.atan2(d.re).abs());
    r - polar_radius(theta)
}

/// `true` iff `w` lies in Ω with radial clearance `margin`, i.e.
/// `|w − 1| < e^{cos θ*} − margin`. A negative margin admits points up to `|margin|`
/// outside, which is how closure checks tolerate exact contact.
pub fn contains(w: Complex64, margin: f64) -> bool {
    if w == Complex64::new(1.0, 0.0) {
        return margin < 1.0 / E;
    }
    radial_excess(w) < -margin
}

/// Extremal values of ℘ on the closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionBounds {
    pub min_re: f64,
    pub max_re: f64,
    pub max_im: f64,
    /// Maximum of |arg ℘| over the boundary.
    pub max_arg: f64,
    /// Root of 3θ/2 + sin θ = π, where Re ℘(e^{iθ}) is minimal.
    pub theta_re: f64,
    /// Root of 3θ/2 + sin θ = π/2, where Im ℘(e^{iθ}) is maximal.
    pub theta_im: f64,
    /// Location of the maximal argument.
    pub theta_arg: f64,
}

impl FunctionBounds {
    /// `max_arg` as a multiple of π/2.
    pub fn max_arg_fraction(&self) -> f64 {
        self.max_arg / FRAC_PI_2
    }
}

fn root_on_half_circle(f: impl Fn(f64) -> f64) -> f64 {
    let b = Bracket::new(&f, 0.0, PI).expect("caller guarantees a sign change on [0, π]");
    solve::find_root(&f, &b, solve::ROOT_TOL)
        .expect("valid bracket")
        .x
}

pub fn function_bounds() -> FunctionBounds {
    let theta_re = root_on_half_circle(|t| 1.5 * t + t.sin() - PI);
    let theta_im = root_on_half_circle(|t| 1.5 * t + t.sin() - FRAC_PI_2);
    let arg = |t: f64| {
        let w = boundary_point(t);
        w.im.atan2(w.re).abs()
    };
    let m = solve::maximize_1d(arg, (0.0, PI), 2048, 1e-11).expect("valid grid");
    FunctionBounds {
        min_re: boundary_point(theta_re).re,
        max_re: right_vertex(),
        max_im: boundary_point(theta_im).im,
        max_arg: m.value,
        theta_re,
        theta_im,
        theta_arg: m.location,
    }
}

/// `max_{|z|=r} |℘(z)| ≤ 1 + r e^r`, attained at z = r.
pub fn modulus_bound(r: f64) -> Result<f64> {
    if !(r > 0.0 && r <= 1.0) {
        return domain(format!("modulus bound needs 0 < r ≤ 1, got {r}"));
    }
    Ok(1.0 + r * r.exp())
}

/// Real-centered disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: f64,
    pub radius: f64,
}

impl Disk {
    pub fn point(&self, t: f64) -> Complex64 {
        Complex64::new(self.center + self.radius * t.cos(), self.radius * t.sin())
    }
}

/// Radius of a disk centered at `a` that touches ∂Ω, plus the interior critical
/// angle of the boundary distance when one exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskFit {
    pub center: f64,
    pub radius: f64,
    pub theta_a: Option<f64>,
}

impl DiskFit {
    pub fn disk(&self) -> Disk {
        Disk {
            center: self.center,
            radius: self.radius,
        }
    }
}

/// Squared distance d(θ) from `a` to ℘(e^{iθ}).
pub fn boundary_distance_sq(a: f64, theta: f64) -> f64 {
    let rho = polar_radius(theta);
    rho * rho - 2.0 * (a - 1.0) * rho * polar_angle(theta).cos() + (a - 1.0) * (a - 1.0)
}

/// Critical-point equation of d(θ) with the factor −4e^{cos θ}cos(θ/2) removed:
/// e^{cos θ} sin(θ/2) + (1 − a) sin(3θ/2 + sin θ).
pub fn theta_a_residual(a: f64, theta: f64) -> f64 {
    polar_radius(theta) * (theta / 2.0).sin() + (1.0 - a) * (1.5 * theta + theta.sin()).sin()
}

/// Variant of [`theta_a_residual`] with the e^{cos θ} weight dropped from the first
/// term. Its roots are not critical points of d(θ); kept for comparison only.
pub fn theta_a_residual_unweighted(a: f64, theta: f64) -> f64 {
    (theta / 2.0).sin() + (1.0 - a) * (1.5 * theta + theta.sin()).sin()
}

/// All roots of [`theta_a_residual`] in (0, π) found by a 256-cell scan.
pub fn theta_a_roots(a: f64) -> Vec<f64> {
    let h = PI / 256.0;
    solve::find_all_roots(|t| theta_a_residual(a, t), (h, PI), 255, solve::ROOT_TOL)
        .expect("fixed scan parameters are valid")
        .into_iter()
        .map(|r| r.x)
        .collect()
}

fn check_center(a: f64) -> Result<()> {
    if !(a > left_vertex() && a < right_vertex()) {
        return domain(format!(
            "disk center must lie in ({}, {}), got {a}",
            left_vertex(),
            right_vertex()
        ));
    }
    Ok(())
}

fn pick_root(a: f64, pick_max: bool) -> Option<f64> {
    theta_a_roots(a).into_iter().reduce(|best, t| {
        let (db, dt) = (boundary_distance_sq(a, best), boundary_distance_sq(a, t));
        if (pick_max && dt > db) || (!pick_max && dt < db) {
            t
        } else {
            best
        }
    })
}

/// Center of the largest inscribed disk, 1 + (e − 1/e)/2.
pub fn inner_crossover() -> f64 {
    1.0 + (E - 1.0 / E) / 2.0
}

/// Center of the smallest enclosing disk, (e + 1/e)/2.
pub fn outer_crossover() -> f64 {
    (E + 1.0 / E) / 2.0
}

/// Largest disk centered at `a` inside Ω.
pub fn inner_disk(a: f64) -> Result<DiskFit> {
    check_center(a)?;
    let radius = if a <= inner_crossover() {
        a - 1.0 + 1.0 / E
    } else {
        E - (a - 1.0)
    };
    Ok(DiskFit {
        center: a,
        radius,
        theta_a: pick_root(a, false),
    })
}

/// Smallest disk centered at `a` containing Ω.
pub fn outer_disk(a: f64) -> Result<DiskFit> {
    check_center(a)?;
    let theta_a = pick_root(a, true);
    if a <= outer_crossover() {
        return Ok(DiskFit {
            center: a,
            radius: 1.0 + E - a,
            theta_a,
        });
    }
    // just past the crossover θ = 0 can still be the farthest point
    let d = theta_a.map_or(0.0, |t| boundary_distance_sq(a, t));
    let radius = d.max(boundary_distance_sq(a, 0.0)).sqrt();
    Ok(DiskFit {
        center: a,
        radius,
        theta_a,
    })
}

/// D_L = {|w − (1 + (e − 1/e)/2)| < (e + 1/e)/2}.
pub fn largest_inscribed_disk() -> Disk {
    inner_disk(inner_crossover())
        .expect("center lies in the real trace")
        .disk()
}

/// D_S = {|w − (e + 1/e)/2| < 1 + (e − 1/e)/2}.
pub fn smallest_enclosing_disk() -> Disk {
    outer_disk(outer_crossover())
        .expect("center lies in the real trace")
        .disk()
}

/// Threshold of the parabola inclusion: max of T(θ) and where it is attained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaThreshold {
    pub b: f64,
    /// Maximizer of T from direct maximization.
    pub theta_0: f64,
    /// Root of the stationarity equation nearest `theta_0`.
    pub theta_0_equation: f64,
}

/// T(θ) = e^{2cos θ} sin²(θ + sin θ) / (4 Re ℘(e^{iθ})).
pub fn parabola_ratio(theta: f64) -> f64 {
    let w = boundary_point(theta);
    let im = w.im;
    im * im / (4.0 * w.re)
}

/// Stationarity equation of T:
/// cos(3θ/2 + sin θ)(2 + e^{cos θ}cos(θ + sin θ)) + e^{cos θ}cos(θ/2).
pub fn parabola_stationarity(theta: f64) -> f64 {
    let rho = polar_radius(theta);
    (1.5 * theta + theta.sin()).cos() * (2.0 + rho * polar_angle(theta).cos())
        + rho * (theta / 2.0).cos()
}

pub fn parabola_threshold() -> ParabolaThreshold {
    let m = solve::maximize_1d(parabola_ratio, (0.0, PI), 1024, 1e-11).expect("valid grid");
    let roots = solve::find_all_roots(parabola_stationarity, (0.0, PI), 512, solve::ROOT_TOL)
        .expect("valid scan");
    let theta_0_equation = roots
        .iter()
        .map(|r| r.x)
        .min_by(|a, b| (a - m.location).abs().total_cmp(&(b - m.location).abs()))
        .unwrap_or(f64::NAN);
    ParabolaThreshold {
        b: m.value,
        theta_0: m.location,
        theta_0_equation,
    }
}

/// Boundary ellipse of {Re w > k|w − 1|} for k > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KstEllipse {
    pub x0: f64,
    pub u: f64,
    pub v: f64,
}

impl KstEllipse {
    pub fn new(k: f64) -> Option<Self> {
        if !(k > 1.0) || !k.is_finite() {
            return None;
        }
        let s = k * k - 1.0;
        Some(KstEllipse {
            x0: k * k / s,
            u: k / s,
            v: 1.0 / s.sqrt(),
        })
    }

    pub fn point(&self, t: f64) -> Complex64 {
        Complex64::new(self.x0 + self.u * t.cos(), self.v * t.sin())
    }
}

/// Whether {Re w > k|w − 1|} lies in Ω. Contact with ∂Ω is allowed up to
/// [`CLOSURE_TOL`], since the threshold ellipse touches Ω at 1 − 1/e.
pub fn kst_ellipse_included(k: f64) -> bool {
    let Some(el) = KstEllipse::new(k) else {
        return false;
    };
    if el.x0 - el.u < left_vertex() - CLOSURE_TOL || el.x0 + el.u > right_vertex() + CLOSURE_TOL {
        return false;
    }
    (0..1024).all(|i| {
        let t = 2.0 * PI * i as f64 / 1024.0;
        contains(el.point(t), -CLOSURE_TOL)
    })
}
