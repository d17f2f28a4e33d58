//! Plot-ready samples of ∂Ω and the comparison curves drawn around it.

use crate::error::{Error, Result};
use crate::geometry::{self, Disk, KstEllipse};
use crate::E;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};
use std::str::FromStr;

/// Half-length of the parameter range used for the unbounded curves
/// (vertical lines, rays, parabola).
pub const UNBOUNDED_SPAN: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    /// γ₀: ∂Ω itself.
    Cardioid,
    /// γ₁: Re w = min Re ℘.
    MinReLine,
    /// γ₂: Re w = 1 + e.
    MaxReLine,
    /// γ₃: the rays |arg w| = max |arg ℘|.
    ArgumentRays,
    /// γ₄: |w − b| − Re w = b with b the parabola threshold.
    Parabola,
    /// γ₅: Re w = (e − 1)|w − 1|.
    KstEllipse,
    /// γ₆: boundary of the largest inscribed disk.
    InscribedDisk,
    /// γ₇: boundary of the smallest enclosing disk.
    EnclosingDisk,
    /// γ₈: ellipse with center 1.7052 and semi-axes 2.1074, 1.0731.
    LegendEllipseA,
    /// γ₉: (2Re w − B)²/B² + 4(Im w)²/(e + BC)² = 1, B = 1 + e, C = 1 − 1/e.
    LegendEllipseB,
}

pub const ALL_CURVES: [Curve; 10] = [
    Curve::Cardioid,
    Curve::MinReLine,
    Curve::MaxReLine,
    Curve::ArgumentRays,
    Curve::Parabola,
    Curve::KstEllipse,
    Curve::InscribedDisk,
    Curve::EnclosingDisk,
    Curve::LegendEllipseA,
    Curve::LegendEllipseB,
];

impl Curve {
    pub fn index(self) -> usize {
        ALL_CURVES.iter().position(|&c| c == self).expect("listed")
    }

    pub fn id(self) -> String {
        format!("gamma{}", self.index())
    }

    pub fn description(self) -> &'static str {
        match self {
            Curve::Cardioid => "boundary of 1 + z e^z",
            Curve::MinReLine => "vertical line Re w = min Re 1 + z e^z",
            Curve::MaxReLine => "vertical line Re w = 1 + e",
            Curve::ArgumentRays => "rays |arg w| = max |arg(1 + z e^z)|",
            Curve::Parabola => "parabola |w - b| - Re w = b at the inclusion threshold",
            Curve::KstEllipse => "ellipse Re w = (e - 1)|w - 1|",
            Curve::InscribedDisk => "largest disk inside the cardioid",
            Curve::EnclosingDisk => "smallest disk around the cardioid",
            Curve::LegendEllipseA => "ellipse centered at 1.7052 with semi-axes 2.1074, 1.0731",
            Curve::LegendEllipseB => "ellipse (2Re w - B)^2/B^2 + 4 Im^2/(e + BC)^2 = 1",
        }
    }

    /// `samples` points `(t, Re, Im)`; `t` is the angle for closed curves and the
    /// signed arc parameter for open ones.
    pub fn sample(self, samples: usize) -> Result<Vec<CurvePoint>> {
        if samples < 16 {
            return Err(Error::Domain(format!(
                "curve sampling needs at least 16 points, got {samples}"
            )));
        }
        let angle = |i: usize| -PI + 2.0 * PI * i as f64 / (samples - 1) as f64;
        let span =
            |i: usize| -UNBOUNDED_SPAN + 2.0 * UNBOUNDED_SPAN * i as f64 / (samples - 1) as f64;
        let ellipse = |cx: f64, a: f64, b: f64| {
            (0..samples)
                .map(|i| {
                    let t = angle(i);
                    CurvePoint {
                        t,
                        re: cx + a * t.cos(),
                        im: b * t.sin(),
                    }
                })
                .collect()
        };
        let disk = |d: Disk| ellipse(d.center, d.radius, d.radius);
        let vline = |x: f64| {
            (0..samples)
                .map(|i| {
                    let t = span(i);
                    CurvePoint { t, re: x, im: t }
                })
                .collect()
        };
        Ok(match self {
            Curve::Cardioid => (0..samples)
                .map(|i| {
                    let t = angle(i);
                    let w = geometry::boundary_point(t);
                    CurvePoint {
                        t,
                        re: w.re,
                        im: w.im,
                    }
                })
                .collect(),
            Curve::MinReLine => vline(geometry::function_bounds().min_re),
            Curve::MaxReLine => vline(geometry::right_vertex()),
            Curve::ArgumentRays => {
                let phi = geometry::function_bounds().max_arg;
                (0..samples)
                    .map(|i| {
                        let t = span(i);
                        let a = if t < 0.0 { -phi } else { phi };
                        CurvePoint {
                            t,
                            re: t.abs() * a.cos(),
                            im: t.abs() * a.sin(),
                        }
                    })
                    .collect()
            }
            Curve::Parabola => {
                // |w − b| = Re w + b  ⇔  (Im w)² = 4b·Re w
                let b = geometry::parabola_threshold().b;
                (0..samples)
                    .map(|i| {
                        let t = span(i);
                        CurvePoint {
                            t,
                            re: t * t / (4.0 * b),
                            im: t,
                        }
                    })
                    .collect()
            }
            Curve::KstEllipse => {
                let el = KstEllipse::new(E - 1.0).expect("e − 1 > 1");
                ellipse(el.x0, el.u, el.v)
            }
            Curve::InscribedDisk => disk(Disk {
                center: 1.0 + (E * E - 1.0) / (2.0 * E),
                radius: (E * E + 1.0) / (2.0 * E),
            }),
            Curve::EnclosingDisk => disk(Disk {
                center: (E * E + 1.0) / (2.0 * E),
                radius: 1.0 + (E * E - 1.0) / (2.0 * E),
            }),
            Curve::LegendEllipseA => ellipse(1.7052, 2.1074, 1.0731),
            Curve::LegendEllipseB => {
                let b = 1.0 + E;
                let c = 1.0 - 1.0 / E;
                ellipse(b / 2.0, b / 2.0, (E + b * c) / 2.0)
            }
        })
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix("gamma")
            .or_else(|| s.strip_prefix('γ'))
            .or_else(|| s.strip_prefix('g'))
            .unwrap_or(s);
        digits
            .parse::<usize>()
            .ok()
            .and_then(|i| ALL_CURVES.get(i).copied())
            .ok_or_else(|| Error::UnknownName(format!("curve '{s}' (expected gamma0 … gamma9)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub t: f64,
    pub re: f64,
    pub im: f64,
}

/// Angle of the argument rays as a multiple of π/2.
pub fn argument_ray_fraction() -> f64 {
    geometry::function_bounds().max_arg / FRAC_PI_2
}
