//! Named radius constants, inclusion thresholds and membership predicates.
//!
//! Every catalog entry is a residual in `r` whose smallest root in (0, 1) is the
//! radius, optionally paired with a closed form. Entries with a saturation rule
//! report 1 when the residual has no root below 1.

use crate::error::{domain, Error, Result};
use crate::geometry;
use crate::series::{cardioid_series, PowerSeries};
use crate::solve::{self, Bracket, RootResult};
use crate::E;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    ConvexityOfP,
    StarlikeAlphaStmt,
    StarlikeAlphaProof,
    MBeta,
    StrongGamma,
    ConvexAlpha,
    ConvexityNumeric,
    FClass,
    CsnAlpha,
    SnAB,
    MnBeta,
    SL,
    SRL,
    Se,
    SC,
    Ss,
    Delta,
    F1Zero,
    F1Half,
    F2,
    F3,
    SStarInto,
}

pub const CATALOG: [Entry; 22] = [
    Entry::ConvexityOfP,
    Entry::StarlikeAlphaStmt,
    Entry::StarlikeAlphaProof,
    Entry::MBeta,
    Entry::StrongGamma,
    Entry::ConvexAlpha,
    Entry::ConvexityNumeric,
    Entry::FClass,
    Entry::CsnAlpha,
    Entry::SnAB,
    Entry::MnBeta,
    Entry::SL,
    Entry::SRL,
    Entry::Se,
    Entry::SC,
    Entry::Ss,
    Entry::Delta,
    Entry::F1Zero,
    Entry::F1Half,
    Entry::F2,
    Entry::F3,
    Entry::SStarInto,
];

/// The six classes S*(q) for a fixed dominant q, all sharp at z = −R.
pub const NAMED_CLASSES: [Entry; 6] = [
    Entry::SL,
    Entry::SRL,
    Entry::Se,
    Entry::SC,
    Entry::Ss,
    Entry::Delta,
];

/// Parameters an entry may need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Alpha,
    Beta,
    Gamma,
    N,
    A,
    B,
}

impl Entry {
    pub fn name(self) -> &'static str {
        match self {
            Entry::ConvexityOfP => "convexity-of-p",
            Entry::StarlikeAlphaStmt => "starlike-alpha-stmt",
            Entry::StarlikeAlphaProof => "starlike-alpha-proof",
            Entry::MBeta => "M-beta",
            Entry::StrongGamma => "strong-gamma",
            Entry::ConvexAlpha => "convex-alpha",
            Entry::ConvexityNumeric => "convexity-numeric",
            Entry::FClass => "F-class",
            Entry::CsnAlpha => "CSn-alpha",
            Entry::SnAB => "Sn-AB",
            Entry::MnBeta => "Mn-beta",
            Entry::SL => "SL-radius",
            Entry::SRL => "SRL-radius",
            Entry::Se => "Se-radius",
            Entry::SC => "SC-radius",
            Entry::Ss => "Ss-radius",
            Entry::Delta => "Delta-radius",
            Entry::F1Zero => "F1-zero",
            Entry::F1Half => "F1-half",
            Entry::F2 => "F2",
            Entry::F3 => "F3",
            Entry::SStarInto => "S-star-into",
        }
    }

    /// What the constant is, in a phrase.
    pub fn description(self) -> &'static str {
        match self {
            Entry::ConvexityOfP => "radius of convexity of 1 + z e^z",
            Entry::StarlikeAlphaStmt => "starlikeness of order alpha, root of 1 - r e^-r = alpha",
            Entry::StarlikeAlphaProof => "starlikeness of order alpha, root of 1 - r e^r = alpha",
            Entry::MBeta => "class M(beta), root of 1 + r e^r = beta",
            Entry::StrongGamma => "strong starlikeness of order gamma, eliminated-angle equation",
            Entry::ConvexAlpha => "convexity of order alpha for the cardioid class",
            Entry::ConvexityNumeric => "numerical convexity radius of z exp(e^z - 1)",
            Entry::FClass => "cardioid radius of the class with Re f/z > 0 (n-fold)",
            Entry::CsnAlpha => {
                "cardioid radius of close-to-starlike functions of type alpha (n-fold)"
            }
            Entry::SnAB => "cardioid radius of the Janowski class S*_n[A,B]",
            Entry::MnBeta => "cardioid radius of the class M_n(beta)",
            Entry::SL => "cardioid radius of S* with dominant sqrt(1+z)",
            Entry::SRL => {
                "cardioid radius of S* with dominant sqrt2 - (sqrt2-1)sqrt((1-z)/(1+2(sqrt2-1)z))"
            }
            Entry::Se => "cardioid radius of S* with dominant e^z",
            Entry::SC => "cardioid radius of S* with dominant 1 + 4z/3 + 2z^2/3",
            Entry::Ss => "cardioid radius of S* with dominant 1 + sin z",
            Entry::Delta => "cardioid radius of S* with dominant z + sqrt(1+z^2)",
            Entry::F1Zero => "cardioid radius of the ratio class F1 with alpha = 0 (n-fold)",
            Entry::F1Half => "cardioid radius of the ratio class F1 with alpha = 1/2 (n-fold)",
            Entry::F2 => "cardioid radius of the ratio class F2 (n-fold)",
            Entry::F3 => "cardioid radius of the ratio class F3 (n-fold)",
            Entry::SStarInto => "cardioid radius of the full starlike class S*",
        }
    }

    pub fn params(self) -> &'static [Param] {
        match self {
            Entry::StarlikeAlphaStmt | Entry::StarlikeAlphaProof | Entry::ConvexAlpha => {
                &[Param::Alpha]
            }
            Entry::MBeta => &[Param::Beta],
            Entry::StrongGamma => &[Param::Gamma],
            Entry::FClass | Entry::F1Zero | Entry::F1Half | Entry::F2 | Entry::F3 => &[Param::N],
            Entry::CsnAlpha => &[Param::N, Param::Alpha],
            Entry::SnAB => &[Param::N, Param::A, Param::B],
            Entry::MnBeta => &[Param::N, Param::Beta],
            _ => &[],
        }
    }

    /// Whether the radius is the class radius into the cardioid class, so that a
    /// sharpness check against ∂Ω makes sense.
    pub fn targets_cardioid_class(self) -> bool {
        !matches!(
            self,
            Entry::ConvexityOfP
                | Entry::StarlikeAlphaStmt
                | Entry::StarlikeAlphaProof
                | Entry::MBeta
                | Entry::StrongGamma
                | Entry::ConvexAlpha
                | Entry::ConvexityNumeric
        )
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CATALOG
            .iter()
            .copied()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(format!("radius '{s}'")))
    }
}

/// Named parameters of a query; unused ones stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Params {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    pub n: Option<u32>,
    pub a: Option<f64>,
    pub b: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusQuery {
    pub entry: Entry,
    pub params: Params,
}

impl RadiusQuery {
    pub fn new(entry: Entry) -> Self {
        RadiusQuery {
            entry,
            params: Params::default(),
        }
    }

    pub fn alpha(mut self, alpha: f64) -> Self {
        self.params.alpha = Some(alpha);
        self
    }

    pub fn beta(mut self, beta: f64) -> Self {
        self.params.beta = Some(beta);
        self
    }

    pub fn gamma(mut self, gamma: f64) -> Self {
        self.params.gamma = Some(gamma);
        self
    }

    pub fn n(mut self, n: u32) -> Self {
        self.params.n = Some(n);
        self
    }

    pub fn ab(mut self, a: f64, b: f64) -> Self {
        self.params.a = Some(a);
        self.params.b = Some(b);
        self
    }

    fn get(&self, p: Param) -> Result<f64> {
        let v = match p {
            Param::Alpha => self.params.alpha,
            Param::Beta => self.params.beta,
            Param::Gamma => self.params.gamma,
            Param::N => self.params.n.map(f64::from),
            Param::A => self.params.a,
            Param::B => self.params.b,
        };
        match v {
            Some(x) if x.is_finite() => Ok(x),
            Some(x) => domain(format!(
                "{}: parameter {p:?} is not finite ({x})",
                self.entry
            )),
            None => domain(format!("{}: missing parameter {p:?}", self.entry)),
        }
    }

    fn fold(&self) -> Result<i32> {
        let n = self.get(Param::N)?;
        if n < 1.0 {
            return domain(format!("{}: n must be at least 1", self.entry));
        }
        Ok(n as i32)
    }
}

/// Which half of the Janowski case split produced the radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JanowskiBranch {
    /// 0 ≤ B < A ≤ 1.
    NonNegativeB,
    /// B < 0, radius R₁ (R₁ ≤ r₁).
    NegativeBLeft,
    /// B < 0, radius R₂ (R₁ > r₁).
    NegativeBRight,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult {
    pub entry: Entry,
    pub value: f64,
    /// Residual at `value`, when a residual defines the entry and the value is a root.
    pub residual: Option<f64>,
    pub closed_form: Option<f64>,
    /// The value was clamped to 1 by a saturation rule.
    pub saturated: bool,
    pub janowski_branch: Option<JanowskiBranch>,
    /// Crossover r₁ of the Janowski case split (B < 0 only).
    pub janowski_crossover: Option<f64>,
    /// Boundary contact and violation both confirmed; `None` when no extremal exists.
    pub sharp: Option<bool>,
}

/// α₀ = 1 + ((√5 − 3)/2)·e^{(√5 − 3)/2}: lower end of the statement variant's domain.
pub fn alpha_0() -> f64 {
    let s = (5f64.sqrt() - 3.0) / 2.0;
    1.0 + s * s.exp()
}

/// Closed-form radius of convexity of ℘, (3 − √5)/2.
pub fn convexity_radius() -> f64 {
    (3.0 - 5f64.sqrt()) / 2.0
}

/// Extremal dominant `q(z) = zf₀'/f₀` of a named class S*(q).
pub fn named_dominant(entry: Entry, z: Complex64) -> Option<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    Some(match entry {
        Entry::SL => (one + z).sqrt(),
        Entry::SRL => {
            let c = SQRT_2 - 1.0;
            SQRT_2 - c * ((one - z) / (one + 2.0 * c * z)).sqrt()
        }
        Entry::Se => z.exp(),
        Entry::SC => one + 4.0 * z / 3.0 + 2.0 * z * z / 3.0,
        Entry::Ss => one + z.sin(),
        Entry::Delta => z + (one + z * z).sqrt(),
        _ => return None,
    })
}

fn named_closed_form(entry: Entry) -> f64 {
    match entry {
        Entry::SL => (2.0 * E - 1.0) / (E * E),
        Entry::SRL => {
            let c = SQRT_2 - 1.0;
            (1.0 + 2.0 * c * E) / (E * E * c * (c + 2.0 * (c + 1.0 / E).powi(2)))
        }
        Entry::Se => 1.0 - (E - 1.0).ln(),
        Entry::SC => 1.0 - (1.0 - 3.0 / (2.0 * E)).sqrt(),
        Entry::Ss => (1.0 / E).asin(),
        Entry::Delta => (2.0 * E - 1.0) / (2.0 * E * (E - 1.0)),
        _ => unreachable!("not a named class"),
    }
}

/// Residual of the strong-starlikeness entry:
/// arcsin(L/r) + √(r² + L²) − γπ/2 with L = ln(r / sin(γπ/2)). NaN where undefined.
pub fn strong_gamma_residual(gamma: f64, r: f64) -> f64 {
    let s = (gamma * FRAC_PI_2).sin();
    let l = (r / s).ln();
    (l / r).asin() + (r * r + l * l).sqrt() - gamma * FRAC_PI_2
}

/// Re(1 + zf₁''/f₁') at z = re^{iθ} for f₁ = z·exp(e^z − 1), in the real form
/// with R = r e^{r cos θ}, θ₁ = θ + r sin θ.
pub fn convexity_function(r: f64, theta: f64) -> f64 {
    let (c, s) = (theta.cos(), theta.sin());
    let big_r = r * (r * c).exp();
    let t1 = theta + r * s;
    let num = 1.0 + r * c + big_r * t1.cos() + r * big_r * (t1 - theta).cos();
    let den = 1.0 + 2.0 * big_r * t1.cos() + big_r * big_r;
    -num / den + 2.0 + r * c + big_r * t1.cos()
}

/// Number of cells of the θ-grid in the numerical convexity scan.
pub const CONVEXITY_GRID: usize = 720;

fn convexity_grid_min(r: f64) -> f64 {
    (0..=CONVEXITY_GRID)
        .map(|k| convexity_function(r, PI * k as f64 / CONVEXITY_GRID as f64))
        .fold(f64::INFINITY, f64::min)
}

fn smallest_root(f: impl Fn(f64) -> f64, hi: f64) -> Result<Option<RootResult>> {
    let roots = solve::find_all_roots(&f, (0.0, hi), solve::SCAN_CELLS, solve::ROOT_TOL)?;
    Ok(roots.into_iter().find(|r| r.x > 0.0))
}

fn n_th_root(x: f64, n: i32) -> f64 {
    x.powf(1.0 / n as f64)
}

/// Stable smaller positive root of a x² − b x + c = 0 for b, c > 0.
fn small_root(a: f64, b: f64, c: f64) -> f64 {
    2.0 * c / (b + (b * b - 4.0 * a * c).sqrt())
}

/// Computes the radius without the sharpness check.
pub fn evaluate(q: &RadiusQuery) -> Result<RadiusResult> {
    let entry = q.entry;
    let base = RadiusResult {
        entry,
        value: f64::NAN,
        residual: None,
        closed_form: None,
        saturated: false,
        janowski_branch: None,
        janowski_crossover: None,
        sharp: None,
    };
    // Residual-with-saturation helper: smallest root in (0, 1), else 1.
    let solve_unit = |f: &dyn Fn(f64) -> f64, closed: Option<f64>| -> Result<RadiusResult> {
        match smallest_root(f, 1.0)? {
            Some(root) if root.x < 1.0 => Ok(RadiusResult {
                value: root.x,
                residual: Some(f(root.x)),
                closed_form: closed,
                ..base.clone()
            }),
            _ => Ok(RadiusResult {
                value: 1.0,
                closed_form: closed,
                saturated: true,
                ..base.clone()
            }),
        }
    };
    let need_root = |f: &dyn Fn(f64) -> f64, closed: Option<f64>| -> Result<RadiusResult> {
        match smallest_root(f, 1.0)? {
            Some(root) => Ok(RadiusResult {
                value: root.x,
                residual: Some(f(root.x)),
                closed_form: closed,
                ..base.clone()
            }),
            None => Err(Error::NoRoot(format!(
                "{entry}: residual has no sign change in (0, 1]"
            ))),
        }
    };
    let check_alpha = |lo_open: bool, lo: f64| -> Result<f64> {
        let a = q.get(Param::Alpha)?;
        let ok = if lo_open { a > lo } else { a >= lo } && a < 1.0;
        if !ok {
            return domain(format!(
                "{entry}: alpha must lie in {}{lo}, 1), got {a}",
                if lo_open { "(" } else { "[" }
            ));
        }
        Ok(a)
    };

    match entry {
        Entry::ConvexityOfP => need_root(
            &|r: f64| r * r * r - 4.0 * r * r + 4.0 * r - 1.0,
            Some(convexity_radius()),
        ),
        Entry::StarlikeAlphaStmt => {
            let a = check_alpha(true, alpha_0())?;
            need_root(&move |r: f64| 1.0 - r * (-r).exp() - a, None)
        }
        Entry::StarlikeAlphaProof => {
            let a = check_alpha(false, 0.0)?;
            need_root(&move |r: f64| 1.0 - r * r.exp() - a, None)
        }
        Entry::MBeta => {
            let beta = q.get(Param::Beta)?;
            if beta <= 1.0 {
                return domain(format!("{entry}: beta must exceed 1, got {beta}"));
            }
            solve_unit(&move |r: f64| 1.0 + r * r.exp() - beta, None)
        }
        Entry::StrongGamma => {
            let g = q.get(Param::Gamma)?;
            if !(g > 0.0 && g <= 1.0) {
                return domain(format!("{entry}: gamma must lie in (0, 1], got {g}"));
            }
            let f = move |r: f64| strong_gamma_residual(g, r);
            match smallest_root(f, 2.0)? {
                Some(root) if root.x < 1.0 => Ok(RadiusResult {
                    value: root.x,
                    residual: Some(f(root.x)),
                    ..base.clone()
                }),
                Some(_) => Ok(RadiusResult {
                    value: 1.0,
                    saturated: true,
                    ..base.clone()
                }),
                None => Err(Error::NoRoot(format!(
                    "{entry}: residual has no sign change in (0, 2] for gamma = {g}"
                ))),
            }
        }
        Entry::ConvexAlpha => {
            let a = check_alpha(false, 0.0)?;
            need_root(
                &move |r: f64| {
                    let w = r * r.exp();
                    (1.0 - r) * (1.0 - w) * (1.0 - w - a) - w
                },
                None,
            )
        }
        Entry::ConvexityNumeric => {
            let b = Bracket::new(convexity_grid_min, 0.3, 0.9)?;
            let root = solve::find_root(convexity_grid_min, &b, solve::ROOT_TOL)?;
            Ok(RadiusResult {
                value: root.x,
                residual: Some(convexity_grid_min(root.x)),
                ..base.clone()
            })
        }
        Entry::FClass => {
            let n = q.fold()?;
            let nf = n as f64;
            let closed = n_th_root((1.0 + nf * nf * E * E).sqrt() - nf * E, n);
            solve_unit(
                &move |r: f64| {
                    let x = r.powi(n);
                    x * x + 2.0 * nf * E * x - 1.0
                },
                Some(closed),
            )
        }
        Entry::CsnAlpha => {
            let n = q.fold()?;
            let a = check_alpha(false, 0.0)?;
            let nf = n as f64;
            let (qa, qb, qc) = (2.0 - 2.0 * a - 1.0 / E, 2.0 * (1.0 + nf - a), 1.0 / E);
            let closed = n_th_root(small_root(qa, qb, qc), n);
            solve_unit(
                &move |r: f64| {
                    let x = r.powi(n);
                    qa * x * x - qb * x + qc
                },
                Some(closed),
            )
        }
        Entry::SnAB | Entry::SStarInto => {
            let (n, a, b) = if entry == Entry::SStarInto {
                (1, 1.0, -1.0)
            } else {
                (q.fold()?, q.get(Param::A)?, q.get(Param::B)?)
            };
            janowski_radius(base.clone(), n, a, b)
        }
        Entry::MnBeta => {
            let n = q.fold()?;
            let beta = q.get(Param::Beta)?;
            if beta <= 1.0 {
                return domain(format!("{entry}: beta must exceed 1, got {beta}"));
            }
            let c = beta - 1.0;
            let closed = (2.0 * E * c + 1.0).powf(-1.0 / n as f64);
            solve_unit(
                &move |r: f64| {
                    let x = r.powi(n);
                    (2.0 * c + 1.0 / E) * x * x + 2.0 * c * x - 1.0 / E
                },
                Some(closed),
            )
        }
        Entry::SL | Entry::SRL | Entry::Se | Entry::SC | Entry::Ss | Entry::Delta => {
            let target = geometry::left_vertex();
            need_root(
                &move |r: f64| {
                    named_dominant(entry, Complex64::new(-r, 0.0))
                        .expect("named class")
                        .re
                        - target
                },
                Some(named_closed_form(entry)),
            )
        }
        Entry::F1Zero => {
            let n = q.fold()?;
            let nf = n as f64;
            let closed = n_th_root((4.0 * nf * nf * E * E + 1.0).sqrt() - 2.0 * nf * E, n);
            solve_unit(
                &move |r: f64| {
                    let x = r.powi(n);
                    x * x + 4.0 * nf * E * x - 1.0
                },
                Some(closed),
            )
        }
        Entry::F1Half | Entry::F2 => {
            let n = q.fold()?;
            let nf = n as f64;
            let (qa, qb) = (nf * E + 1.0, 3.0 * nf * E);
            let closed = n_th_root(2.0 / (qb + (qb * qb + 4.0 * qa).sqrt()), n);
            solve_unit(
                &move |r: f64| {
                    let x = r.powi(n);
                    qa * x * x + qb * x - 1.0
                },
                Some(closed),
            )
        }
        Entry::F3 => {
            let n = q.fold()?;
            let nf = n as f64;
            let (qa, qb, qc) = (nf - 1.0 + 1.0 / E, nf + 1.0, 1.0 / E);
            let closed = n_th_root(2.0 * qc / (qb + (qb * qb + 4.0 * qa * qc).sqrt()), n);
            solve_unit(
                &move |r: f64| {
                    let x = r.powi(n);
                    qa * x * x + qb * x - qc
                },
                Some(closed),
            )
        }
    }
}

/// The Janowski constants: R₁, R₂ and the crossover r₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiConstants {
    pub r1_radius: f64,
    pub r2_radius: Option<f64>,
    pub crossover: Option<f64>,
}

pub fn janowski_constants(n: i32, a: f64, b: f64) -> Result<JanowskiConstants> {
    if !(-1.0 <= b && b < a && a <= 1.0) {
        return domain(format!(
            "Janowski parameters need -1 <= B < A <= 1, got A = {a}, B = {b}"
        ));
    }
    if b < 0.0 && a < 0.0 {
        return domain(format!(
            "Janowski radius needs A >= 0 when B < 0, got A = {a}"
        ));
    }
    let d = a - (1.0 - 1.0 / E) * b;
    let r1_radius = n_th_root((1.0 / (E * d)).min(1.0), n);
    if b >= 0.0 {
        return Ok(JanowskiConstants {
            r1_radius,
            r2_radius: None,
            crossover: None,
        });
    }
    let k = (E * E - 1.0) / (2.0 * E);
    let crossover =
        (k / ((E * E + 2.0 * E - 1.0) / (2.0 * E) * b * b - a * b)).powf(0.5 / n as f64);
    let r2_radius = n_th_root((E / (a - (E + 1.0) * b)).min(1.0), n);
    Ok(JanowskiConstants {
        r1_radius,
        r2_radius: Some(r2_radius),
        crossover: Some(crossover),
    })
}

fn janowski_radius(base: RadiusResult, n: i32, a: f64, b: f64) -> Result<RadiusResult> {
    let consts = janowski_constants(n, a, b)?;
    let d = a - (1.0 - 1.0 / E) * b;
    let left = move |r: f64| {
        let x = r.powi(n);
        b * d * x * x + (a - b) * x - 1.0 / E
    };
    let right = move |r: f64| {
        let x = r.powi(n);
        b * ((1.0 + E) * b - a) * x * x + (a - b) * x - E
    };
    let (branch, closed, f): (_, _, Box<dyn Fn(f64) -> f64>) =
        match (consts.r2_radius, consts.crossover) {
            (Some(r2), Some(r1c)) if consts.r1_radius > r1c => {
                (JanowskiBranch::NegativeBRight, r2, Box::new(right))
            }
            (Some(_), Some(_)) => (
                JanowskiBranch::NegativeBLeft,
                consts.r1_radius,
                Box::new(left),
            ),
            _ => (
                JanowskiBranch::NonNegativeB,
                consts.r1_radius,
                Box::new(left),
            ),
        };
    let mut out = RadiusResult {
        closed_form: Some(closed),
        janowski_branch: Some(branch),
        janowski_crossover: consts.crossover,
        ..base
    };
    match smallest_root(&f, 1.0)? {
        Some(root) if root.x < 1.0 => {
            out.value = root.x;
            out.residual = Some(f(root.x));
        }
        _ => {
            out.value = 1.0;
            out.saturated = true;
        }
    }
    Ok(out)
}

/// Radius with its sharpness flag filled in when the entry has an extremal.
pub fn solve_radius(q: &RadiusQuery) -> Result<RadiusResult> {
    let mut out = evaluate(q)?;
    out.sharp = match crate::subordination::radius_sharpness(q, 1e-3) {
        Ok(s) => Some(s.contact_ok && s.violation_ok),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(out)
}

/// Sharp thresholds for inclusions of classical classes in the cardioid class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionThresholds {
    /// min Re ℘: S*(α) ⊃ cardioid class iff α ≤ omega_0.
    pub omega_0: f64,
    /// max Re ℘ = 1 + e: cardioid class ⊂ M(β) iff β ≥ beta_min.
    pub beta_min: f64,
    /// max |arg ℘| / (π/2).
    pub gamma_0: f64,
    pub parabola_b: f64,
    pub ellipse_k: f64,
}

pub fn inclusion_thresholds() -> InclusionThresholds {
    let fb = geometry::function_bounds();
    InclusionThresholds {
        omega_0: fb.min_re,
        beta_min: fb.max_re,
        gamma_0: fb.max_arg_fraction(),
        parabola_b: geometry::parabola_threshold().b,
        ellipse_k: E - 1.0,
    }
}

/// Whether S*[A, B] lies in the cardioid class. With a = (1 − AB)/(1 − B²):
/// (i) 1 − 1/e < a ≤ 1 + (e − 1/e)/2 and (e − 1)(1 − B) ≤ e(1 − A), or
/// (ii) 1 + (e − 1/e)/2 ≤ a < 1 + e and A − B ≤ e(1 + B).
pub fn janowski_included(a: f64, b: f64) -> Result<bool> {
    if !(-1.0 <= b && b < a && a <= 1.0) {
        return domain(format!(
            "Janowski inclusion needs -1 <= B < A <= 1, got A = {a}, B = {b}"
        ));
    }
    if b <= -1.0 {
        // (1 + Az)/(1 − z) maps onto a half-plane
        return Ok(false);
    }
    let s = 1.0 - b * b;
    let c = 2.0 * E * (1.0 - a * b);
    let first = 2.0 * (E - 1.0) * s < c
        && c <= (E * E + 2.0 * E - 1.0) * s
        && (E - 1.0) * (1.0 - b) <= E * (1.0 - a);
    let second =
        (E * E + 2.0 * E - 1.0) * s <= c && c < 2.0 * E * (1.0 + E) * s && a - b <= E * (1.0 + b);
    Ok(first || second)
}

/// The image disk of (1 + Az)/(1 + Bz) for −1 < B < A ≤ 1.
pub fn janowski_disk(a: f64, b: f64) -> geometry::Disk {
    geometry::Disk {
        center: (1.0 - a * b) / (1.0 - b * b),
        radius: (a - b) / (1.0 - b * b),
    }
}

/// Growth and distortion bounds on |z| = r and the covering constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthCovering {
    pub lower: f64,
    pub upper: f64,
    pub covering: f64,
    pub distortion_upper: f64,
    pub global_modulus_bound: f64,
}

/// f₁(x) = x·exp(e^x − 1) for real x.
pub fn f1_real(x: f64) -> f64 {
    x * (x.exp() - 1.0).exp()
}

pub fn growth_covering(r: f64) -> Result<GrowthCovering> {
    if !(r > 0.0 && r < 1.0) {
        return domain(format!("growth bounds need 0 < r < 1, got {r}"));
    }
    Ok(GrowthCovering {
        lower: -f1_real(-r),
        upper: f1_real(r),
        covering: (1.0 / E - 1.0).exp(),
        distortion_upper: (1.0 + r * r.exp()) * (r.exp() - 1.0).exp(),
        global_modulus_bound: (E - 1.0).exp(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingleCoefficient {
    /// Slit maps z/(1 − Az)²: |A| ≤ 1/(2e − 1).
    SlitMap,
    /// f(z) = z + b_k z^k.
    OneTerm(u32),
    /// f(z) = z e^{Az}.
    ExpMap,
}

/// Largest coefficient modulus keeping the single-parameter family in the class.
pub fn single_coeff_threshold(kind: SingleCoefficient) -> Result<f64> {
    match kind {
        SingleCoefficient::SlitMap => Ok(1.0 / (2.0 * E - 1.0)),
        SingleCoefficient::OneTerm(k) if k >= 2 => Ok(1.0 / (E * (k as f64 - 1.0) + 1.0)),
        SingleCoefficient::OneTerm(k) => {
            domain(format!("one-term threshold needs k >= 2, got {k}"))
        }
        SingleCoefficient::ExpMap => Ok(1.0 / E),
    }
}

/// Image disk of zf'/f over 𝔻 for the family member with coefficient `a ≥ 0`.
pub fn single_coeff_disk(kind: SingleCoefficient, a: f64) -> Result<geometry::Disk> {
    if !(0.0..1.0).contains(&a) {
        return domain(format!("single-coefficient disk needs 0 <= a < 1, got {a}"));
    }
    match kind {
        // z/(1 − Az)²: zf'/f = (1 + Az)/(1 − Az)
        SingleCoefficient::SlitMap => Ok(janowski_disk(a, -a)),
        // z + b z^k: zf'/f = (1 + k b w)/(1 + b w), w = z^{k−1}
        SingleCoefficient::OneTerm(k) if k >= 2 => Ok(janowski_disk(k as f64 * a, a)),
        SingleCoefficient::OneTerm(k) => domain(format!("one-term disk needs k >= 2, got {k}")),
        // z e^{Az}: zf'/f = 1 + Az
        SingleCoefficient::ExpMap => Ok(geometry::Disk {
            center: 1.0,
            radius: a,
        }),
    }
}

/// Whether a real-centered disk lies in Ω, via the inscribed radius at its center.
pub fn disk_in_cardioid(d: &geometry::Disk) -> bool {
    match geometry::inner_disk(d.center) {
        Ok(fit) => d.radius <= fit.radius + 1e-12,
        Err(_) => false,
    }
}

/// Minimum of Re ℘ on |z| = r.
pub fn min_re_on_circle(r: f64) -> f64 {
    let m = solve::maximize_1d(
        |t| -geometry::cardioid(Complex64::from_polar(r, t)).re,
        (0.0, PI),
        2048,
        1e-12,
    )
    .expect("valid grid");
    -m.value
}

/// Coefficients of f₁ = z·exp(e^z − 1) through `order`.
pub fn f1_series(order: usize) -> Result<PowerSeries> {
    cardioid_series(order.saturating_sub(1)).from_caratheodory()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(q: RadiusQuery) -> f64 {
        evaluate(&q).unwrap().value
    }

    #[test]
    fn names_round_trip() {
        for e in CATALOG {
            assert_eq!(e.name().parse::<Entry>().unwrap(), e);
        }
        assert!("nope".parse::<Entry>().is_err());
    }

    #[test]
    fn convexity_entry() {
        let r = evaluate(&RadiusQuery::new(Entry::ConvexityOfP)).unwrap();
        assert!((r.value - convexity_radius()).abs() < 1e-12);
    }

    #[test]
    fn m_beta_saturates() {
        let r = evaluate(&RadiusQuery::new(Entry::MBeta).beta(1.0 + E + 0.5)).unwrap();
        assert!(r.saturated && r.value == 1.0);
        assert!(evaluate(&RadiusQuery::new(Entry::MBeta).beta(1.0)).is_err());
    }

    #[test]
    fn missing_parameter_is_domain_error() {
        assert!(matches!(
            evaluate(&RadiusQuery::new(Entry::FClass)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn starlike_stmt_domain() {
        assert!(evaluate(&RadiusQuery::new(Entry::StarlikeAlphaStmt).alpha(0.5)).is_err());
        assert!(value(RadiusQuery::new(Entry::StarlikeAlphaStmt).alpha(0.9)) > 0.0);
    }

    #[test]
    fn s_star_into_value() {
        let v = value(RadiusQuery::new(Entry::SStarInto));
        assert!((v - 1.0 / (2.0 * E - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn janowski_examples() {
        assert!(janowski_included(1.0 / E, 0.0).unwrap());
        assert!(!janowski_included(1.0, -1.0).unwrap());
        assert!(janowski_included(0.0, 0.5).is_err());
    }

    #[test]
    fn single_coefficient_thresholds() {
        let one_term = single_coeff_threshold(SingleCoefficient::OneTerm(2)).unwrap();
        assert!((one_term - 1.0 / (E + 1.0)).abs() < 1e-15);
        assert!(single_coeff_threshold(SingleCoefficient::OneTerm(1)).is_err());
    }
}
