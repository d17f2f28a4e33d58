//! End-to-end acceptance run. Prints one line per criterion, then findings, and
//! fails if any criterion fails outside the known-unattainable list.

use cardioid::coeffs::{self, H3Scan};
use cardioid::geometry;
use cardioid::radii::{self, Entry, RadiusQuery, NAMED_CLASSES};
use cardioid::series::PowerSeries;
use cardioid::subordination;
use cardioid::{Complex64, E};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

struct Item {
    label: String,
    ok: bool,
    detail: String,
}

fn near(label: &str, got: f64, want: f64, tol: f64) -> Item {
    Item {
        label: label.into(),
        ok: (got - want).abs() <= tol,
        detail: format!("got {got:.12}, want {want:.12} ± {tol:e}"),
    }
}

fn at_most(label: &str, got: f64, bound: f64) -> Item {
    Item {
        label: label.into(),
        ok: got <= bound,
        detail: format!("{got:.12} <= {bound:.12}"),
    }
}

fn flag(label: &str, ok: bool, detail: impl Into<String>) -> Item {
    Item {
        label: label.into(),
        ok,
        detail: detail.into(),
    }
}

// ---- oracles -------------------------------------------------------------

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn boundary(theta: f64) -> Complex64 {
    let z = Complex64::from_polar(1.0, theta);
    1.0 + z * z.exp()
}

/// Dense samples of the upper half of ∂Ω.
fn boundary_table(n: usize) -> Vec<Complex64> {
    (0..=n)
        .map(|k| boundary(PI * k as f64 / n as f64))
        .collect()
}

fn winding(w: Complex64, samples: usize) -> i64 {
    let mut total = 0.0;
    let mut prev = boundary(0.0) - w;
    for k in 1..=samples {
        let cur = boundary(2.0 * PI * k as f64 / samples as f64) - w;
        total += (cur / prev).arg();
        prev = cur;
    }
    (total / (2.0 * PI)).round() as i64
}

fn bell_triangle(n: usize) -> Vec<u64> {
    // Aitken's array: each row starts with the last entry of the previous row.
    let mut row = vec![1u64];
    let mut out = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        out.push(next[0]);
        row = next;
    }
    out
}

fn random_disk(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(rng.random::<f64>().sqrt(), 2.0 * PI * rng.random::<f64>())
}

// ---- criteria ------------------------------------------------------------

fn c1() -> Vec<Item> {
    let cubic = |r: f64| r * r * r - 4.0 * r * r + 4.0 * r - 1.0;
    let r = radii::evaluate(&RadiusQuery::new(Entry::ConvexityOfP))
        .unwrap()
        .value;
    let exact = (3.0 - 5f64.sqrt()) / 2.0;
    vec![
        near("solver vs (3-sqrt5)/2", r, exact, 1e-10),
        near("bisection oracle", bisect(cubic, 0.0, 0.5), exact, 1e-10),
        near("reference value", r, 0.381966, 1e-6),
    ]
}

fn c2() -> Vec<Item> {
    let fb = geometry::function_bounds();
    let n = 400_000;
    let (mut min_re, mut t_re, mut max_im, mut t_im, mut max_arg) =
        (f64::MAX, 0.0, 0.0, 0.0, 0.0f64);
    for k in 0..=n {
        let t = PI * k as f64 / n as f64;
        let w = boundary(t);
        if w.re < min_re {
            min_re = w.re;
            t_re = t;
        }
        if w.im > max_im {
            max_im = w.im;
            t_im = t;
        }
        max_arg = max_arg.max(w.arg().abs());
    }
    vec![
        near("min Re", fb.min_re, 0.136038, 1e-5),
        near("max |Im|", fb.max_im, 2.10743, 1e-5),
        near("max |arg|/(pi/2)", fb.max_arg_fraction(), 0.89782, 1e-5),
        near("theta of min Re", fb.theta_re, 1.43396, 1e-4),
        near("theta of max Im", fb.theta_im, 0.645913, 1e-4),
        near("dense oracle min Re", fb.min_re, min_re, 1e-9),
        near("dense oracle max Im", fb.max_im, max_im, 1e-9),
        near("dense oracle max arg", fb.max_arg, max_arg, 1e-9),
        near("dense oracle theta min Re", fb.theta_re, t_re, 1e-4),
        near("dense oracle theta max Im", fb.theta_im, t_im, 1e-4),
    ]
}

fn c3() -> Vec<Item> {
    let dl = geometry::largest_inscribed_disk();
    let ds = geometry::smallest_enclosing_disk();
    let mut items = vec![
        near("D_L center", dl.center, 1.0 + (E - 1.0 / E) / 2.0, 1e-15),
        near("D_L radius", dl.radius, (E + 1.0 / E) / 2.0, 1e-15),
        near("D_S center", ds.center, (E + 1.0 / E) / 2.0, 1e-15),
        near("D_S radius", ds.radius, 1.0 + (E - 1.0 / E) / 2.0, 1e-15),
    ];
    let table = boundary_table(200_000);
    let (lo, hi) = (geometry::left_vertex(), geometry::right_vertex());
    let (mut worst_in, mut worst_out) = (0.0f64, 0.0f64);
    let mut failures = Vec::new();
    for i in 0..50 {
        let a = lo + (hi - lo) * (i as f64 + 0.5) / 50.0;
        let dists = table.iter().map(|w| (w - a).norm());
        let (dmin, dmax) = dists.fold((f64::MAX, 0.0f64), |(m, x), d| (m.min(d), x.max(d)));
        match geometry::inner_disk(a) {
            Ok(fit) => worst_in = worst_in.max((fit.radius - dmin).abs()),
            Err(e) => failures.push(format!("inner a={a}: {e}")),
        }
        match geometry::outer_disk(a) {
            Ok(fit) => worst_out = worst_out.max((fit.radius - dmax).abs()),
            Err(e) => failures.push(format!("outer a={a}: {e}")),
        }
    }
    items.push(at_most(
        "inner radius vs distance oracle (50 centers)",
        worst_in,
        1e-6,
    ));
    items.push(at_most(
        "outer radius vs distance oracle (50 centers)",
        worst_out,
        1e-6,
    ));
    items.push(flag(
        "all centers solved",
        failures.is_empty(),
        failures.join("; "),
    ));
    items
}

fn c4() -> Vec<Item> {
    let th = radii::inclusion_thresholds();
    let pt = geometry::parabola_threshold();
    // oracle: max over the boundary of Im²/(4 Re), the b with Ω inside the parabola
    let n = 400_000;
    let (b_oracle, t_oracle) = (0..=n)
        .map(|k| {
            let t = PI * k as f64 / n as f64;
            let w = boundary(t);
            (w.im * w.im / (4.0 * w.re), t)
        })
        .fold(
            (0.0, 0.0),
            |best, cur| if cur.0 > best.0 { cur } else { best },
        );
    vec![
        near("parabola b", pt.b, 1.58405, 1e-5),
        near("parabola theta", pt.theta_0, 1.23442, 1e-4),
        near("parabola b oracle", pt.b, b_oracle, 1e-9),
        near("parabola theta oracle", pt.theta_0, t_oracle, 1e-4),
        flag(
            "ellipse threshold is e - 1",
            th.ellipse_k == E - 1.0,
            format!("{}", th.ellipse_k),
        ),
        flag(
            "ellipse included at e - 1, not below",
            geometry::kst_ellipse_included(E - 1.0)
                && !geometry::kst_ellipse_included(E - 1.0 - 1e-4),
            "",
        ),
        near("gamma_0", th.gamma_0, 0.897828, 1e-5),
    ]
}

fn c5() -> Vec<Item> {
    let f1_half = (-3.0 * E + (9.0 * E * E + 4.0 * (E + 1.0)).sqrt()) / (2.0 * (E + 1.0));
    let cases: Vec<(RadiusQuery, Option<f64>, Option<f64>)> = vec![
        (
            RadiusQuery::new(Entry::ConvexAlpha).alpha(0.0),
            Some(0.256707),
            None,
        ),
        (
            RadiusQuery::new(Entry::FClass).n(1),
            Some(0.178105),
            Some((1.0 + E * E).sqrt() - E),
        ),
        (
            RadiusQuery::new(Entry::SL),
            Some(0.600423),
            Some((2.0 * E - 1.0) / (E * E)),
        ),
        (RadiusQuery::new(Entry::SRL), Some(0.648826), None),
        (
            RadiusQuery::new(Entry::Se),
            Some(0.458675),
            Some(1.0 - (E - 1.0).ln()),
        ),
        (
            RadiusQuery::new(Entry::SC),
            Some(0.330536),
            Some(1.0 - (1.0 - 3.0 / (2.0 * E)).sqrt()),
        ),
        (
            RadiusQuery::new(Entry::Ss),
            Some(0.376727),
            Some((1.0 / E).asin()),
        ),
        (
            RadiusQuery::new(Entry::Delta),
            Some(0.474928),
            Some((2.0 * E - 1.0) / (2.0 * E * (E - 1.0))),
        ),
        (
            RadiusQuery::new(Entry::SStarInto),
            None,
            Some(1.0 / (2.0 * E - 1.0)),
        ),
        (
            RadiusQuery::new(Entry::MnBeta).n(1).beta(2.0),
            None,
            Some(1.0 / (2.0 * E + 1.0)),
        ),
        (
            RadiusQuery::new(Entry::F1Zero).n(1),
            None,
            Some((4.0 * E * E + 1.0).sqrt() - 2.0 * E),
        ),
        (RadiusQuery::new(Entry::F1Half).n(1), None, Some(f1_half)),
        (RadiusQuery::new(Entry::F2).n(1), None, Some(f1_half)),
        (
            RadiusQuery::new(Entry::F3).n(1),
            None,
            Some((1.0 + E * E).sqrt() - E),
        ),
    ];
    let mut items = Vec::new();
    for (q, printed, closed) in cases {
        let name = q.entry.name();
        let r = match radii::evaluate(&q) {
            Ok(r) => r,
            Err(e) => {
                items.push(flag(name, false, e.to_string()));
                continue;
            }
        };
        let target = printed.or(closed).unwrap();
        items.push(near(
            &format!("{name} residual solve"),
            r.value,
            target,
            1e-5,
        ));
        if let Some(res) = r.residual {
            items.push(at_most(&format!("{name} |residual|"), res.abs(), 1e-10));
        }
        if let Some(cf) = closed {
            items.push(near(&format!("{name} vs closed form"), r.value, cf, 1e-10));
        }
        if let Some(cf) = r.closed_form {
            items.push(near(
                &format!("{name} vs library closed form"),
                r.value,
                cf,
                1e-10,
            ));
        }
    }
    items
}

fn c6() -> Vec<Item> {
    NAMED_CLASSES
        .iter()
        .map(
            |&e| match subordination::radius_sharpness(&RadiusQuery::new(e), 1e-3) {
                Ok(s) => flag(
                    e.name(),
                    s.contact_ok && s.violation_ok,
                    format!(
                        "contact excess {:.2e}, max at radius {:.2e}, beyond {:.2e}",
                        s.contact_excess, s.max_excess_at_radius, s.max_excess_beyond
                    ),
                ),
                Err(err) => flag(e.name(), false, err.to_string()),
            },
        )
        .collect()
}

fn c7() -> Vec<Item> {
    let f1 = coeffs::extremal_coeffs(1, 13).unwrap();
    let want = [1.0, 1.0, 1.0, 5.0 / 6.0, 5.0 / 8.0, 13.0 / 30.0];
    let worst = want
        .iter()
        .enumerate()
        .map(|(k, w)| (f1.coeff(k + 1) - w).norm())
        .fold(0.0, f64::max);
    let bell = coeffs::bell_numbers(12).unwrap();
    let oracle = bell_triangle(12);
    let fact = |n: usize| (1..=n).map(|k| k as f64).product::<f64>();
    let ratio_err = (0..=12)
        .map(|k| (f1.coeff(k + 1).re - oracle[k] as f64 / fact(k)).abs())
        .fold(0.0, f64::max);
    let gc = radii::growth_covering(0.5).unwrap();
    vec![
        at_most("f1 coefficients b1..b6", worst, 1e-12),
        flag(
            "Bell recurrence exact through B12",
            bell.values == oracle,
            format!("{:?}", bell.values),
        ),
        at_most("b_(k+1) = B_k/k! through k = 12", ratio_err, 1e-12),
        near("covering exp(1/e - 1)", gc.covering, 0.531464, 1e-6),
        near(
            "covering equals -f1(-1)",
            gc.covering,
            -radii::f1_real(-1.0),
            1e-15,
        ),
    ]
}

fn c8() -> Vec<Item> {
    let audit = coeffs::stochastic_audit(2024, 10_000).unwrap();
    let mut items: Vec<Item> = audit
        .lines
        .iter()
        .take(7)
        .map(|l| {
            at_most(
                &format!("audit {}", l.functional),
                l.observed_max,
                l.bound + 1e-9,
            )
        })
        .collect();
    // second route: coefficients from the series composition on the same samples
    let mut worst = 0.0f64;
    for s in coeffs::tower_samples(2024, 500) {
        let b = s.coeffs();
        let f = coeffs::coeffs_from_caratheodory_series(&s.caratheodory()).unwrap();
        for k in 1..=5 {
            worst = worst.max((f.coeff(k) - b[k - 1]).norm());
        }
    }
    items.push(at_most("tower coefficients vs series route", worst, 1e-12));
    for w in coeffs::audit_witnesses().unwrap() {
        items.push(near(
            &format!("witness {} attains", w.attained_at),
            w.value,
            w.bound,
            1e-6,
        ));
    }
    items
}

fn c9() -> Vec<Item> {
    let h = coeffs::h3_upper_bound(128, 1e-9).unwrap();
    let cr = h.case_report;
    let p0 = 2.0 * ((68.0 - 7.0 * 34f64.sqrt()) / 87.0).sqrt();
    let r3 = coeffs::nfold_h3(3).unwrap();
    let r2 = coeffs::nfold_h3(2).unwrap();
    vec![
        near("g2 maximizer (scan)", cr.g2.location, 1.11795, 1e-5),
        near("g2 maximizer (closed form)", cr.g2_closed_form, p0, 1e-15),
        near("g2(p0)", cr.g2.value, 887.674, 1e-2),
        near("G interior maximizer p", cr.interior.p, 0.531621, 1e-4),
        near("G interior maximizer x", cr.interior.x, 0.482768, 1e-4),
        at_most("G maximum", cr.interior.value, 1388.18 + 1e-2),
        near("H3 bound", h.bound, 0.150627, 1e-5),
        near(
            "triangle bound",
            coeffs::h3_triangle_bound().unwrap(),
            0.913864,
            1e-6,
        ),
        flag("3-fold bound is exactly 1/9", r3.bound == 1.0 / 9.0, ""),
        near("3-fold witness attains", r3.value, r3.bound, 1e-12),
        flag("2-fold bound is exactly 1/16", r2.bound == 1.0 / 16.0, ""),
        near("2-fold witness attains", r2.value, r2.bound, 1e-12),
    ]
}

fn c10() -> Vec<Item> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let n = 12;
    let (mut rev, mut explog, mut cara) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..200 {
        let mut c: Vec<Complex64> = (0..=n)
            .map(|k| {
                Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
                    / (1.0 + k as f64)
            })
            .collect();
        c[0] = Complex64::new(0.0, 0.0);
        let a = PowerSeries::new(c.clone());
        c[1] = Complex64::new(1.0, 0.0);
        let f = PowerSeries::new(c);
        let g = f.reversion().unwrap();
        let id = f.compose(&g).unwrap();
        rev = rev.max(
            (0..=n)
                .map(|k| (id.coeff(k) - if k == 1 { 1.0 } else { 0.0 }).norm())
                .fold(0.0, f64::max),
        );
        let back = a.exp().unwrap().ln().unwrap();
        explog = explog.max(
            (0..=n)
                .map(|k| (back.coeff(k) - a.coeff(k)).norm())
                .fold(0.0, f64::max),
        );
        let mut pc = a.coeffs().to_vec();
        pc[0] = Complex64::new(1.0, 0.0);
        let p = PowerSeries::new(pc);
        let q = p.from_caratheodory().unwrap().log_derivative().unwrap();
        cara = cara.max(
            (0..=n)
                .map(|k| (q.coeff(k) - p.coeff(k)).norm())
                .fold(0.0, f64::max),
        );
    }
    // membership vs winding number
    let table = {
        let m = 20_000;
        (0..m)
            .map(|k| boundary(2.0 * PI * k as f64 / m as f64))
            .collect::<Vec<_>>()
    };
    let (mut tested, mut disagree) = (0, 0);
    while tested < 4000 {
        let w = Complex64::new(
            -1.0 + 6.0 * rng.random::<f64>(),
            -4.0 + 8.0 * rng.random::<f64>(),
        );
        let clearance = table
            .iter()
            .map(|b| (b - w).norm())
            .fold(f64::MAX, f64::min)
            - 1e-6;
        if clearance < 1e-9 {
            continue;
        }
        tested += 1;
        if (winding(w, 4096) != 0) != geometry::contains(w, 0.0) {
            disagree += 1;
        }
    }
    // Υ expansion vs tower path
    let mut ups = 0.0f64;
    for _ in 0..500 {
        let p1 = 2.0 * rng.random::<f64>();
        let (z, e, x) = (
            random_disk(&mut rng),
            random_disk(&mut rng),
            random_disk(&mut rng),
        );
        let a = coeffs::h3_components(p1, z, e, x).unwrap();
        let b = coeffs::h3_direct(p1, z, e, x).unwrap();
        ups = ups.max((a - b).norm());
    }
    vec![
        at_most("reversion round trip", rev, 1e-9),
        at_most("exp/log round trip", explog, 1e-9),
        at_most("Caratheodory integral round trip", cara, 1e-9),
        flag(
            "membership vs winding number",
            disagree == 0,
            format!("{disagree} of {tested} disagree"),
        ),
        at_most("Upsilon expansion vs direct path", ups, 1e-9),
    ]
}

fn findings() -> Vec<String> {
    let mut out = Vec::new();
    let m = coeffs::nfold2_class_maximum().unwrap();
    out.push(format!(
        "2-fold H3(1) reaches {:.9} ({}) above the stated 1/16 = 0.0625",
        m.value, m.attained_at
    ));
    let h = coeffs::h3_upper_bound(128, 1e-9).unwrap();
    out.push(format!(
        "majorant built from the expansion that matches the tower peaks at {:.9} = {:.9}/9216 (p = {:.6}, x = {:.6})",
        h.case_report.corrected_majorant.value / 9216.0,
        h.case_report.corrected_majorant.value,
        h.case_report.corrected_majorant.p,
        h.case_report.corrected_majorant.x
    ));
    let gap = (0..=100)
        .map(|i| {
            let x = i as f64 / 100.0;
            (H3Scan::new(0.0, x, 1.0).big_g() - coeffs::g3(x)).abs()
        })
        .fold(0.0, f64::max);
    out.push(format!(
        "G(0, x) - g3(x) = 1152x(1 - x^2)^2 (max gap {gap:.4}); G on p = 0 peaks at {:.4} at x = {:.6}, still below the interior maximum",
        h.case_report.g_on_p0.value, h.case_report.g_on_p0.location
    ));
    let audit = coeffs::stochastic_audit(2024, 10_000).unwrap();
    for c in &audit.conjecture {
        out.push(format!(
            "conjecture monitor k = {}: max |b_k| = {:.6} vs B_(k-1)/(k-1)! = {:.6}, violations {}",
            c.k, c.observed_max, c.conjectured_bound, c.violations
        ));
    }
    let sg = radii::evaluate(&RadiusQuery::new(Entry::StrongGamma).gamma(0.4))
        .unwrap()
        .value;
    let oracle = subordination::sharp_strong_gamma_radius(0.4).value;
    out.push(format!(
        "strong-gamma at 0.4: catalog residual {sg:.6}, max-arg oracle {oracle:.6}"
    ));
    out
}

/// Items whose target value cannot be reached by a faithful implementation. They
/// still print as failures; the run asserts that each one keeps failing so the list
/// cannot hide a regression or go stale.
const UNATTAINABLE: [(&str, &str, &str); 1] = [(
    "C9",
    "g2(p0)",
    "target 887.674 disagrees with the stated g2 at the stated p0, which is 887.6406",
)];

#[test]
fn acceptance() {
    let criteria: Vec<(&str, &str, fn() -> Vec<Item>)> = vec![
        ("C1", "convexity radius of 1 + z e^z", c1),
        ("C2", "function bounds on the closed disk", c2),
        ("C3", "inscribed and enclosing disks", c3),
        ("C4", "inclusion thresholds", c4),
        ("C5", "radius catalog constants", c5),
        ("C6", "sharpness of the named-class radii", c6),
        ("C7", "extremal coefficients, Bell numbers, covering", c7),
        ("C8", "stochastic coefficient audit", c8),
        ("C9", "H3(1) rectangle maximization", c9),
        ("C10", "property suites", c10),
    ];
    let known = |id: &str, label: &str| UNATTAINABLE.iter().any(|u| u.0 == id && u.1 == label);
    let mut failed = Vec::new();
    let mut known_seen = Vec::new();
    for (id, title, run) in criteria {
        let items = run();
        let ok = items.iter().all(|i| i.ok);
        println!(
            "[{}] {id} {title} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            items.len()
        );
        for i in items.iter().filter(|i| !i.ok) {
            println!("       - {}: {}", i.label, i.detail);
            if known(id, &i.label) {
                known_seen.push((id, i.label.clone()));
            } else {
                failed.push(format!("{id} {}", i.label));
            }
        }
    }
    for (id, label, why) in UNATTAINABLE {
        println!("UNATTAINABLE: {id} {label}: {why}");
    }
    for f in findings() {
        println!("FINDING: {f}");
    }
    assert!(failed.is_empty(), "failed checks: {failed:?}");
    assert_eq!(
        known_seen.len(),
        UNATTAINABLE.len(),
        "an unattainable item now passes; update the list"
    );
}
