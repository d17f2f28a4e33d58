//! Command implementations behind the `cardioid` binary.
//!
//! Every command writes either JSON (default) or CSV to the supplied writer. Floats
//! are rounded to 12 significant digits so that output is byte-stable.

use crate::coeffs;
use crate::curves::Curve;
use crate::error::{Error, Result};
use crate::geometry;
use crate::radii::{self, Entry, RadiusQuery, CATALOG, NAMED_CLASSES};
use crate::subordination;
use crate::E;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use std::f64::consts::PI;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Significant digits kept in every emitted float.
pub const SIG_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "cardioid",
    version,
    about = "Constants, curves and checks for the cardioid domain 1 + z e^z"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Geometry,
    Radii,
    Coefficients,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Extremal {
    F1,
    F2,
    F3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every catalog radius and geometric threshold.
    Constants {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// One catalog radius with explicit parameters.
    Radius {
        name: String,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<f64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Plot samples of one of the curves gamma0 … gamma9.
    Curve {
        id: String,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Taylor coefficients of an extremal function.
    Coeffs {
        #[arg(long, value_enum, default_value = "f1")]
        function: Extremal,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The H₃(1) rectangle maximization and related bounds.
    HankelBound {
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a verification suite; exits with status 2 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(Error::Io(msg)) => {
            eprintln!("cardioid: {msg}");
            1
        }
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Constants { format } => {
            emit_records(&constants()?, *format, out)?;
            Ok(EXIT_OK)
        }
        Command::Radius {
            name,
            alpha,
            beta,
            gamma,
            n,
            a,
            b,
            format,
        } => {
            let entry: Entry = name.parse()?;
            let q = RadiusQuery {
                entry,
                params: radii::Params {
                    alpha: *alpha,
                    beta: *beta,
                    gamma: *gamma,
                    n: *n,
                    a: *a,
                    b: *b,
                },
            };
            emit_records(&[radius_record(&q)?], *format, out)?;
            Ok(EXIT_OK)
        }
        Command::Curve {
            id,
            samples,
            format,
        } => {
            let curve: Curve = id.parse()?;
            let points = curve.sample(*samples)?;
            match format {
                Format::Json => {
                    let doc = serde_json::json!({
                        "curve": curve.id(),
                        "description": curve.description(),
                        "points": points,
                    });
                    write_json(&doc, out)?;
                }
                Format::Csv => write_csv(&points, out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Coeffs {
            function,
            order,
            format,
        } => {
            let n = match function {
                Extremal::F1 => 1,
                Extremal::F2 => 2,
                Extremal::F3 => 3,
            };
            let f = coeffs::extremal_coeffs(n, *order)?;
            let rows: Vec<CoeffRow> = (1..=f.order())
                .map(|k| CoeffRow {
                    k,
                    re: f.coeff(k).re,
                    im: f.coeff(k).im,
                })
                .collect();
            match format {
                Format::Json => write_json(
                    &serde_json::json!({ "function": format!("f{n}"), "coefficients": rows }),
                    out,
                )?,
                Format::Csv => write_csv(&rows, out)?,
            }
            Ok(EXIT_OK)
        }
        Command::HankelBound { grid, tol, format } => {
            let doc = hankel_report(*grid, *tol)?;
            emit_document(&doc, *format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            seed,
            format,
        } => {
            let checks = verify(*suite, *seed)?;
            let pass = checks.iter().all(|c| c.pass);
            match format {
                Format::Json => write_json(
                    &serde_json::json!({ "suite": suite_name(*suite), "seed": seed, "pass": pass, "checks": checks }),
                    out,
                )?,
                Format::Csv => write_csv(&checks, out)?,
            }
            Ok(if pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

/// One emitted constant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub name: String,
    pub value: f64,
    pub params: String,
    pub refs: String,
    pub residual: Option<f64>,
    pub closed_form: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize)]
struct CoeffRow {
    k: usize,
    re: f64,
    im: f64,
}

fn params_label(q: &RadiusQuery) -> String {
    let p = q.params;
    let mut parts = Vec::new();
    let mut push = |name: &str, v: Option<f64>| {
        if let Some(x) = v {
            parts.push(format!("{name}={}", round_sig(x)));
        }
    };
    push("alpha", p.alpha);
    push("beta", p.beta);
    push("gamma", p.gamma);
    push("n", p.n.map(f64::from));
    push("A", p.a);
    push("B", p.b);
    parts.join(";")
}

/// Parameters used for each catalog entry in the constants table.
pub fn default_query(entry: Entry) -> RadiusQuery {
    let q = RadiusQuery::new(entry);
    match entry {
        Entry::StarlikeAlphaStmt | Entry::StarlikeAlphaProof => q.alpha(0.9),
        Entry::ConvexAlpha => q.alpha(0.0),
        Entry::MBeta => q.beta(2.0),
        Entry::StrongGamma => q.gamma(0.5),
        Entry::FClass | Entry::F1Zero | Entry::F1Half | Entry::F2 | Entry::F3 => q.n(1),
        Entry::CsnAlpha => q.n(1).alpha(0.0),
        Entry::SnAB => q.n(1).ab(1.0, 0.0),
        Entry::MnBeta => q.n(1).beta(2.0),
        _ => q,
    }
}

fn radius_record(q: &RadiusQuery) -> Result<OutputRecord> {
    let r = radii::evaluate(q)?;
    Ok(OutputRecord {
        name: q.entry.name().to_string(),
        value: r.value,
        params: params_label(q),
        refs: q.entry.description().to_string(),
        residual: r.residual,
        closed_form: r.closed_form,
    })
}

fn plain(name: &str, value: f64, refs: &str) -> OutputRecord {
    OutputRecord {
        name: name.into(),
        value,
        params: String::new(),
        refs: refs.into(),
        residual: None,
        closed_form: None,
    }
}

/// The full constants table: catalog radii, then geometric thresholds.
pub fn constants() -> Result<Vec<OutputRecord>> {
    let mut rows = CATALOG
        .iter()
        .map(|&e| radius_record(&default_query(e)))
        .collect::<Result<Vec<_>>>()?;
    let fb = geometry::function_bounds();
    let th = radii::inclusion_thresholds();
    let pt = geometry::parabola_threshold();
    let inner = geometry::largest_inscribed_disk();
    let outer = geometry::smallest_enclosing_disk();
    let gc = radii::growth_covering(0.5)?;
    rows.extend([
        plain(
            "min-re",
            fb.min_re,
            "minimum of Re(1 + z e^z) on the closed disk",
        ),
        plain(
            "min-re-theta",
            fb.theta_re,
            "boundary angle of the minimal real part",
        ),
        plain(
            "max-re",
            fb.max_re,
            "maximum of Re(1 + z e^z), equal to 1 + e",
        ),
        plain("max-im", fb.max_im, "maximum of |Im(1 + z e^z)|"),
        plain(
            "max-im-theta",
            fb.theta_im,
            "boundary angle of the maximal imaginary part",
        ),
        plain(
            "max-arg-fraction",
            th.gamma_0,
            "maximum of |arg(1 + z e^z)| divided by pi/2",
        ),
        plain(
            "parabola-b",
            th.parabola_b,
            "least b with the cardioid inside |w - b| - Re w < b",
        ),
        plain(
            "parabola-theta",
            pt.theta_0,
            "boundary angle where the parabola touches",
        ),
        plain(
            "ellipse-k",
            th.ellipse_k,
            "least k with k-starlike inside the cardioid class, e - 1",
        ),
        plain(
            "inscribed-disk-center",
            inner.center,
            "center of the largest disk inside the cardioid",
        ),
        plain(
            "inscribed-disk-radius",
            inner.radius,
            "radius of the largest disk inside the cardioid",
        ),
        plain(
            "enclosing-disk-center",
            outer.center,
            "center of the smallest disk around the cardioid",
        ),
        plain(
            "enclosing-disk-radius",
            outer.radius,
            "radius of the smallest disk around the cardioid",
        ),
        plain(
            "alpha-0",
            radii::alpha_0(),
            "lower end of the alpha range of starlike-alpha-stmt",
        ),
        plain(
            "covering",
            gc.covering,
            "Koebe-type covering radius exp(1/e - 1)",
        ),
        plain(
            "modulus-bound",
            gc.global_modulus_bound,
            "global bound |f(z)| < e^(e - 1)",
        ),
        plain(
            "slit-map-threshold",
            radii::single_coeff_threshold(radii::SingleCoefficient::SlitMap)?,
            "largest |A| for z/(1 - Az)^2",
        ),
        plain(
            "exp-map-threshold",
            radii::single_coeff_threshold(radii::SingleCoefficient::ExpMap)?,
            "largest |A| for z e^(Az)",
        ),
    ]);
    Ok(rows)
}

fn hankel_report(grid: usize, tol: f64) -> Result<Value> {
    let h = coeffs::h3_upper_bound(grid, tol)?;
    Ok(serde_json::json!({
        "bound": h.bound,
        "case_report": h.case_report,
        "triangle_bound": coeffs::h3_triangle_bound()?,
        "triangle_ingredients": coeffs::triangle_ingredients()?,
        "nfold_3": coeffs::nfold_h3(3)?,
        "nfold_2": coeffs::nfold_h3(2)?,
        "nfold_2_class_maximum": coeffs::nfold2_class_maximum()?,
    }))
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub observed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub margin: f64,
    pub pass: bool,
}

impl Check {
    fn near(suite: &str, name: &str, observed: f64, expected: f64, tolerance: f64) -> Self {
        let margin = tolerance - (observed - expected).abs();
        Check {
            suite: suite.into(),
            name: name.into(),
            observed,
            expected,
            tolerance,
            margin,
            pass: margin >= 0.0,
        }
    }

    fn at_most(suite: &str, name: &str, observed: f64, bound: f64, slack: f64) -> Self {
        let margin = bound + slack - observed;
        Check {
            suite: suite.into(),
            name: name.into(),
            observed,
            expected: bound,
            tolerance: slack,
            margin,
            pass: margin >= 0.0,
        }
    }

    fn flag(suite: &str, name: &str, ok: bool) -> Self {
        let v = if ok { 1.0 } else { 0.0 };
        Check::near(suite, name, v, 1.0, 0.0)
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Geometry => "geometry",
        Suite::Radii => "radii",
        Suite::Coefficients => "coefficients",
        Suite::All => "all",
    }
}

/// Runs the checks of `suite`; randomized parts use `seed`.
pub fn verify(suite: Suite, seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Geometry | Suite::All) {
        checks.extend(verify_geometry(seed)?);
    }
    if matches!(suite, Suite::Radii | Suite::All) {
        checks.extend(verify_radii()?);
    }
    if matches!(suite, Suite::Coefficients | Suite::All) {
        checks.extend(verify_coefficients(seed)?);
    }
    Ok(checks)
}

/// Winding number of the sampled boundary curve around `w`.
fn winding_number(w: Complex64, samples: usize) -> i64 {
    let mut total = 0.0;
    let mut prev = geometry::boundary_point(-PI) - w;
    for k in 1..=samples {
        let cur = geometry::boundary_point(-PI + 2.0 * PI * k as f64 / samples as f64) - w;
        total += (cur / prev).arg();
        prev = cur;
    }
    (total / (2.0 * PI)).round() as i64
}

fn distance_to_boundary(w: Complex64, samples: usize) -> f64 {
    (0..samples)
        .map(|k| (geometry::boundary_point(-PI + 2.0 * PI * k as f64 / samples as f64) - w).norm())
        .fold(f64::INFINITY, f64::min)
}

fn verify_geometry(seed: u64) -> Result<Vec<Check>> {
    let s = "geometry";
    let fb = geometry::function_bounds();
    let mut out = vec![
        Check::near(s, "min-re", fb.min_re, 0.136038, 1e-5),
        Check::near(s, "min-re-theta", fb.theta_re, 1.43396, 1e-4),
        Check::near(s, "max-im", fb.max_im, 2.10743, 1e-5),
        Check::near(s, "max-im-theta", fb.theta_im, 0.645913, 1e-4),
        Check::near(s, "max-arg-fraction", fb.max_arg_fraction(), 0.89782, 1e-5),
    ];
    let pt = geometry::parabola_threshold();
    out.push(Check::near(s, "parabola-b", pt.b, 1.58405, 1e-5));
    out.push(Check::near(s, "parabola-theta", pt.theta_0, 1.23442, 1e-4));
    out.push(Check::flag(
        s,
        "ellipse-k-threshold",
        geometry::kst_ellipse_included(E - 1.0) && !geometry::kst_ellipse_included(E - 1.0 - 1e-3),
    ));
    let inner = geometry::largest_inscribed_disk();
    out.push(Check::near(
        s,
        "inscribed-center",
        inner.center,
        1.0 + (E - 1.0 / E) / 2.0,
        1e-12,
    ));
    out.push(Check::near(
        s,
        "inscribed-radius",
        inner.radius,
        (E + 1.0 / E) / 2.0,
        1e-12,
    ));
    let outer = geometry::smallest_enclosing_disk();
    out.push(Check::near(
        s,
        "enclosing-center",
        outer.center,
        (E + 1.0 / E) / 2.0,
        1e-12,
    ));
    out.push(Check::near(
        s,
        "enclosing-radius",
        outer.radius,
        1.0 + (E - 1.0 / E) / 2.0,
        1e-12,
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut agree, mut total) = (0usize, 0usize);
    while total < 500 {
        let w = Complex64::new(
            -1.0 + 6.0 * rng.random::<f64>(),
            -4.0 + 8.0 * rng.random::<f64>(),
        );
        if distance_to_boundary(w, 4096) < 1e-3 {
            continue;
        }
        total += 1;
        let oracle = winding_number(w, 4096) != 0;
        if oracle == geometry::contains(w, 0.0) {
            agree += 1;
        }
    }
    out.push(Check::near(
        s,
        "membership-vs-winding",
        agree as f64,
        total as f64,
        0.0,
    ));
    Ok(out)
}

/// Reference radius constants with their parameters.
pub fn reference_radii() -> Vec<(RadiusQuery, f64, f64)> {
    vec![
        (RadiusQuery::new(Entry::ConvexityOfP), 0.381966, 1e-5),
        (
            RadiusQuery::new(Entry::ConvexAlpha).alpha(0.0),
            0.256707,
            1e-5,
        ),
        (RadiusQuery::new(Entry::FClass).n(1), 0.178105, 1e-5),
        (RadiusQuery::new(Entry::SL), 0.600423, 1e-5),
        (RadiusQuery::new(Entry::SRL), 0.648826, 1e-5),
        (RadiusQuery::new(Entry::Se), 0.458675, 1e-5),
        (RadiusQuery::new(Entry::SC), 0.330536, 1e-5),
        (RadiusQuery::new(Entry::Ss), 0.376727, 1e-5),
        (RadiusQuery::new(Entry::Delta), 0.474928, 1e-5),
        (
            RadiusQuery::new(Entry::SStarInto),
            1.0 / (2.0 * E - 1.0),
            1e-5,
        ),
        (
            RadiusQuery::new(Entry::MnBeta).n(1).beta(2.0),
            1.0 / (2.0 * E + 1.0),
            1e-5,
        ),
        (
            RadiusQuery::new(Entry::F1Zero).n(1),
            (4.0 * E * E + 1.0).sqrt() - 2.0 * E,
            1e-5,
        ),
        (RadiusQuery::new(Entry::ConvexityNumeric), 0.599547, 1e-5),
    ]
}

fn verify_radii() -> Result<Vec<Check>> {
    let s = "radii";
    let mut out = Vec::new();
    for (q, want, tol) in reference_radii() {
        let r = radii::evaluate(&q)?;
        out.push(Check::near(s, q.entry.name(), r.value, want, tol));
        if let Some(cf) = r.closed_form {
            out.push(Check::near(
                s,
                &format!("{}-closed-form", q.entry.name()),
                r.value,
                cf,
                1e-10,
            ));
        }
    }
    for e in NAMED_CLASSES {
        let sh = subordination::radius_sharpness(&RadiusQuery::new(e), 1e-3)?;
        out.push(Check::flag(
            s,
            &format!("{}-sharp", e.name()),
            sh.contact_ok && sh.violation_ok,
        ));
    }
    let th = radii::inclusion_thresholds();
    out.push(Check::near(s, "omega-0", th.omega_0, 0.136038, 1e-5));
    out.push(Check::near(s, "gamma-0", th.gamma_0, 0.897828, 1e-5));
    out.push(Check::near(
        s,
        "covering",
        radii::growth_covering(0.5)?.covering,
        0.531464,
        1e-6,
    ));
    Ok(out)
}

fn verify_coefficients(seed: u64) -> Result<Vec<Check>> {
    let s = "coefficients";
    let mut out = Vec::new();
    let f1 = coeffs::extremal_coeffs(1, 6)?;
    for (k, want) in [1.0, 1.0, 1.0, 5.0 / 6.0, 5.0 / 8.0, 13.0 / 30.0]
        .iter()
        .enumerate()
    {
        out.push(Check::near(
            s,
            &format!("f1-b{}", k + 1),
            f1.coeff(k + 1).re,
            *want,
            1e-12,
        ));
    }
    let bell = coeffs::bell_numbers(12)?;
    let f = coeffs::extremal_coeffs(1, 13)?;
    let worst = (0..=12)
        .map(|k| (f.coeff(k + 1).re - bell.ratio(k).expect("k ≤ 12")).abs())
        .fold(0.0, f64::max);
    out.push(Check::at_most(s, "bell-ratio-match", worst, 0.0, 1e-12));

    let audit = coeffs::stochastic_audit(seed, 10_000)?;
    for line in &audit.lines {
        out.push(Check::at_most(
            s,
            &format!("audit {}", line.functional),
            line.observed_max,
            line.bound,
            coeffs::AUDIT_SLACK,
        ));
    }
    for w in coeffs::audit_witnesses()? {
        out.push(Check::near(
            s,
            &format!("witness {}", w.attained_at),
            w.value,
            w.bound,
            1e-6,
        ));
    }
    let h = coeffs::h3_upper_bound(128, 1e-9)?;
    out.push(Check::near(s, "h3-bound", h.bound, 0.150627, 1e-5));
    out.push(Check::near(
        s,
        "g2-maximizer",
        h.case_report.g2.location,
        1.11795,
        1e-5,
    ));
    out.push(Check::near(
        s,
        "h3-triangle",
        coeffs::h3_triangle_bound()?,
        0.913864,
        1e-6,
    ));
    for fold in [3, 2] {
        let r = coeffs::nfold_h3(fold)?;
        out.push(Check::near(
            s,
            &format!("nfold-{fold}"),
            r.value,
            r.bound,
            1e-12,
        ));
    }
    Ok(out)
}

/// Rounds to [`SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            serde_json::Number::from_f64(round_sig(n.as_f64().expect("f64")))
                .map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(m) => {
            Value::Object(m.into_iter().map(|(k, v)| (k, round_value(v))).collect())
        }
        other => other,
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

fn write_json(doc: &impl Serialize, out: &mut dyn Write) -> Result<()> {
    let v = round_value(serde_json::to_value(doc).map_err(io_err)?);
    serde_json::to_writer_pretty(&mut *out, &v).map_err(io_err)?;
    writeln!(out).map_err(io_err)
}

fn write_csv<T: Serialize>(rows: &[T], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = true;
    for row in rows {
        // round through JSON so CSV and JSON agree digit for digit
        let v = round_value(serde_json::to_value(row).map_err(io_err)?);
        let Value::Object(m) = v else {
            return Err(Error::Io("CSV rows must be records".into()));
        };
        if header {
            w.write_record(m.keys()).map_err(io_err)?;
            header = false;
        }
        w.write_record(m.values().map(csv_cell)).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit_records(rows: &[OutputRecord], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => write_json(&rows, out),
        Format::Csv => write_csv(rows, out),
    }
}

/// Flattens nested objects into `path,value` rows for CSV.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, rows);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, rows);
            }
        }
        other => rows.push((prefix.to_string(), csv_cell(other))),
    }
}

fn emit_document(doc: &Value, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => write_json(doc, out),
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", &round_value(doc.clone()), &mut rows);
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["key", "value"]).map_err(io_err)?;
            for (k, v) in rows {
                w.write_record([k, v]).map_err(io_err)?;
            }
            w.flush().map_err(io_err)
        }
    }
}
