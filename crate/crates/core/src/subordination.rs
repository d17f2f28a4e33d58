//! Sampled subordination to ℘ and sharpness checks for catalog radii.
//!
//! For a univalent dominant, q ≺ ℘ on |z| < ρ iff q(ρ𝔻) ⊂ Ω; for the Jordan-curve
//! images used here it is enough to test the boundary circle and the point 1.

use crate::error::{contract, domain, Error, Result};
use crate::geometry;
use crate::radii::{self, Entry, JanowskiBranch, RadiusQuery};
use crate::solve::{self, Bracket};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Default number of boundary samples.
pub const DEFAULT_SAMPLES: usize = 512;
/// Sample count used by sharpness checks.
pub const SHARPNESS_SAMPLES: usize = 4096;
/// Absolute tolerance for boundary contact in the w-plane.
pub const CONTACT_TOL: f64 = 1e-6;

/// Samples `q(ρe^{iθ})` on a uniform θ-grid over `[−π, π)` plus optional extra angles.
pub struct BoundarySampler<F> {
    map: F,
    pub rho: f64,
    pub samples: usize,
    extra_angles: Vec<f64>,
}

impl<F: Fn(Complex64) -> Complex64> BoundarySampler<F> {
    pub fn new(map: F, rho: f64, samples: usize) -> Self {
        BoundarySampler {
            map,
            rho,
            samples,
            extra_angles: Vec::new(),
        }
    }

    /// Adds angles that must be sampled exactly (e.g. a known contact angle).
    pub fn with_angles(mut self, angles: &[f64]) -> Self {
        self.extra_angles.extend_from_slice(angles);
        self
    }

    /// `q(ρe^{iθ})`.
    pub fn eval(&self, theta: f64) -> Complex64 {
        (self.map)(Complex64::from_polar(self.rho, theta))
    }

    /// `q(0)`.
    pub fn center(&self) -> Complex64 {
        (self.map)(Complex64::new(0.0, 0.0))
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.samples;
        (0..n)
            .map(move |k| -PI + 2.0 * PI * k as f64 / n as f64)
            .chain(self.extra_angles.iter().copied())
    }

    /// `max |q(ρe^{−iθ}) − conj q(ρe^{iθ})|` over the grid.
    pub fn symmetry_defect(&self) -> f64 {
        self.angles()
            .map(|t| (self.eval(-t) - self.eval(t).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Largest radial excess over ∂Ω among the samples, and where it occurs.
    pub fn max_excess(&self) -> (f64, f64) {
        self.angles()
            .map(|t| (geometry::radial_excess(self.eval(t)), t))
            .fold((f64::NEG_INFINITY, 0.0), |best, cur| {
                if cur.0 > best.0 {
                    cur
                } else {
                    best
                }
            })
    }
}

/// Whether every sampled point of `q(ρ∂𝔻)`, and the point 1, pass
/// [`geometry::contains`] with `margin`. A negative margin tolerates contact.
pub fn subordinate_to_cardioid<F: Fn(Complex64) -> Complex64>(
    q: &BoundarySampler<F>,
    margin: f64,
) -> Result<bool> {
    if q.samples < DEFAULT_SAMPLES {
        return contract(format!(
            "subordination check needs at least {DEFAULT_SAMPLES} samples, got {}",
            q.samples
        ));
    }
    let c = q.center();
    if (c - 1.0).norm() > 1e-12 {
        return domain(format!("candidate must satisfy q(0) = 1, got {c}"));
    }
    if !geometry::contains(Complex64::new(1.0, 0.0), margin) {
        return Ok(false);
    }
    Ok(q.angles().all(|t| geometry::contains(q.eval(t), margin)))
}

/// Extremal `zf₀'/f₀` of a catalog entry and the angle at which it meets ∂Ω.
pub struct Extremal {
    pub map: Box<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
    pub contact_angle: f64,
    pub description: &'static str,
}

/// Extremal function for an entry that targets the cardioid class.
pub fn extremal(q: &RadiusQuery) -> Result<Extremal> {
    let entry = q.entry;
    let fold = || -> Result<i32> {
        match q.params.n {
            Some(n) if n >= 1 => Ok(n as i32),
            _ => domain(format!("{entry}: n must be at least 1")),
        }
    };
    let one = Complex64::new(1.0, 0.0);
    Ok(match entry {
        Entry::SL | Entry::SRL | Entry::Se | Entry::SC | Entry::Ss | Entry::Delta => Extremal {
            map: Box::new(move |z| radii::named_dominant(entry, z).expect("named class")),
            contact_angle: PI,
            description: "dominant of the class",
        },
        Entry::FClass => {
            let n = fold()?;
            let nf = n as f64;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    one + 2.0 * nf * w / (one - w * w)
                }),
                contact_angle: PI / nf,
                description: "z((1 + z^n)/(1 - z^n))^(1/n)",
            }
        }
        Entry::CsnAlpha => {
            let n = fold()?;
            let nf = n as f64;
            let a = q
                .params
                .alpha
                .ok_or_else(|| Error::Domain(format!("{entry}: missing alpha")))?;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    (one + (1.0 - 2.0 * a) * w) / (one - w) + 2.0 * nf * w / (one - w * w)
                }),
                contact_angle: PI / nf,
                description: "f0 with f0/g0 = (1 + z^n)/(1 - z^n), g0 starlike of order alpha",
            }
        }
        Entry::SnAB | Entry::SStarInto => {
            let res = radii::evaluate(q)?;
            let (n, a, b) = if entry == Entry::SStarInto {
                (1, 1.0, -1.0)
            } else {
                (
                    fold()?,
                    q.params.a.unwrap_or(f64::NAN),
                    q.params.b.unwrap_or(f64::NAN),
                )
            };
            let angle = match res.janowski_branch {
                Some(JanowskiBranch::NegativeBRight) => 0.0,
                _ => PI / n as f64,
            };
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    (one + a * w) / (one + b * w)
                }),
                contact_angle: angle,
                description: "z(1 + B z^n)^((A - B)/(nB)), or z exp(A z^n / n) when B = 0",
            }
        }
        Entry::MnBeta => {
            let n = fold()?;
            let beta = q
                .params
                .beta
                .ok_or_else(|| Error::Domain(format!("{entry}: missing beta")))?;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    (one + (1.0 - 2.0 * beta) * w) / (one - w)
                }),
                contact_angle: 0.0,
                description: "z (1 - z^n)^(2(beta - 1)/n)",
            }
        }
        Entry::F1Zero => {
            let n = fold()?;
            let nf = n as f64;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    one + 4.0 * nf * w / (one - w * w)
                }),
                contact_angle: PI / nf,
                description: "z((1 + z^n)/(1 - z^n))^2",
            }
        }
        Entry::F1Half => {
            let n = fold()?;
            let nf = n as f64;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    one + nf * w / (one + w) + 2.0 * nf * w / (one - w)
                }),
                contact_angle: 0.0,
                description: "z(1 + z^n)/(1 - z^n)^2",
            }
        }
        Entry::F2 => {
            let n = fold()?;
            let nf = n as f64;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    one + 2.0 * nf * w / (one + w) + nf * w / (one - w)
                }),
                contact_angle: PI / nf,
                description: "z(1 + z^n)^2/(1 - z^n)",
            }
        }
        Entry::F3 => {
            let n = fold()?;
            let nf = n as f64;
            Extremal {
                map: Box::new(move |z| {
                    let w = z.powi(n);
                    one + nf * w / (one + w) + w / (one - w)
                }),
                contact_angle: PI / nf,
                description: "z(1 + z^n)/(1 - z^n)^(1/n)",
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "{entry}: no extremal function into the cardioid class"
            )))
        }
    })
}

/// Outcome of a sharpness check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sharpness {
    /// The extremal image at the radius stays in the closure and touches ∂Ω.
    pub contact_ok: bool,
    /// The extremal image at radius·(1 + ε) leaves the closure.
    pub violation_ok: bool,
    pub radius: f64,
    pub contact_angle: f64,
    pub contact_point: Complex64,
    /// Radial excess at the contact angle (0 for exact contact).
    pub contact_excess: f64,
    /// Largest radial excess over the samples at the radius.
    pub max_excess_at_radius: f64,
    /// Largest radial excess over the samples at radius·(1 + ε).
    pub max_excess_beyond: f64,
}

/// Checks boundary contact at the computed radius and escape just beyond it.
pub fn radius_sharpness(q: &RadiusQuery, epsilon: f64) -> Result<Sharpness> {
    if !(epsilon > 0.0 && epsilon <= 1e-2) {
        return domain(format!(
            "sharpness epsilon must lie in (0, 1e-2], got {epsilon}"
        ));
    }
    if !q.entry.targets_cardioid_class() {
        return Err(Error::Unsupported(format!(
            "{}: not a radius into the cardioid class",
            q.entry
        )));
    }
    let res = radii::evaluate(q)?;
    if res.saturated {
        return Err(Error::Unsupported(format!(
            "{}: radius saturates at 1",
            q.entry
        )));
    }
    let ext = extremal(q)?;
    let r = res.value;
    let at = BoundarySampler::new(&ext.map, r, SHARPNESS_SAMPLES).with_angles(&[ext.contact_angle]);
    let beyond = BoundarySampler::new(&ext.map, r * (1.0 + epsilon), SHARPNESS_SAMPLES)
        .with_angles(&[ext.contact_angle]);
    let contact_point = at.eval(ext.contact_angle);
    let contact_excess = geometry::radial_excess(contact_point);
    let (max_at, _) = at.max_excess();
    let (max_beyond, _) = beyond.max_excess();
    Ok(Sharpness {
        contact_ok: contact_excess.abs() <= CONTACT_TOL && max_at <= CONTACT_TOL,
        violation_ok: max_beyond > 0.0,
        radius: r,
        contact_angle: ext.contact_angle,
        contact_point,
        contact_excess,
        max_excess_at_radius: max_at,
        max_excess_beyond: max_beyond,
    })
}

/// Radius from a containment oracle, with saturation flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRadius {
    pub value: f64,
    pub saturated: bool,
}

/// `sup{r : m(r) ≥ α}` for a nonincreasing `m` on (0, 1], by bracketed root finding.
pub fn sharp_radius_oracle(min_re_of_image: impl Fn(f64) -> f64, alpha: f64) -> OracleRadius {
    if min_re_of_image(1.0) >= alpha {
        return OracleRadius {
            value: 1.0,
            saturated: true,
        };
    }
    let lo = 1e-12;
    if min_re_of_image(lo) < alpha {
        return OracleRadius {
            value: 0.0,
            saturated: true,
        };
    }
    let f = |r: f64| min_re_of_image(r) - alpha;
    let b = Bracket::new(&f, lo, 1.0).expect("sign change established above");
    let root = solve::find_root(&f, &b, 1e-10).expect("valid bracket");
    OracleRadius {
        value: root.x,
        saturated: false,
    }
}

/// Sharp radius of starlikeness of order α for the cardioid class, from min Re ℘.
pub fn starlike_alpha_oracle(alpha: f64) -> OracleRadius {
    sharp_radius_oracle(radii::min_re_on_circle, alpha)
}

/// Maximum of |arg ℘(re^{iθ})| over θ.
pub fn max_arg_on_circle(r: f64) -> f64 {
    solve::maximize_1d(
        |t| {
            let w = geometry::cardioid(Complex64::from_polar(r, t));
            w.im.atan2(w.re).abs()
        },
        (0.0, PI),
        2048,
        1e-12,
    )
    .expect("valid grid")
    .value
}

/// Sharp radius of strong starlikeness of order γ: `sup{r : max |arg ℘(re^{iθ})| ≤ γπ/2}`.
pub fn sharp_strong_gamma_radius(gamma: f64) -> OracleRadius {
    sharp_radius_oracle(|r| -max_arg_on_circle(r), -gamma * PI / 2.0)
}
