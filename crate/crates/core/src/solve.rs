//! Deterministic scalar root finding and bounded maximization.

use crate::error::{contract, Result};

/// Default absolute tolerance for roots.
pub const ROOT_TOL: f64 = 1e-12;
/// Default tolerance on the final cell of a maximization.
pub const REFINE_TOL: f64 = 1e-8;
/// Default number of cells in a root scan.
pub const SCAN_CELLS: usize = 512;

const MAX_ITERATIONS: usize = 500;

/// An interval on which a continuous function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    /// Evaluates `f` at both ends and checks the sign condition.
    pub fn new(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<Self> {
        let b = Bracket {
            lo,
            hi,
            f_lo: f(lo),
            f_hi: f(hi),
        };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        if !(self.lo < self.hi) || !self.lo.is_finite() || !self.hi.is_finite() {
            return contract(format!("bad bracket [{}, {}]", self.lo, self.hi));
        }
        if !self.f_lo.is_finite() || !self.f_hi.is_finite() {
            return contract(format!(
                "non-finite function value on bracket [{}, {}]",
                self.lo, self.hi
            ));
        }
        if self.f_lo * self.f_hi > 0.0 {
            return contract(format!(
                "no sign change on [{}, {}]: f = {}, {}",
                self.lo, self.hi, self.f_lo, self.f_hi
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Brent-style root finder: inverse quadratic / secant steps guarded by bisection.
/// Stops when the bracket is narrower than `tol` or an exact zero is hit.
pub fn find_root(f: impl Fn(f64) -> f64, b: &Bracket, tol: f64) -> Result<RootResult> {
    b.validate()?;
    if !(tol > 0.0) {
        return contract("tolerance must be positive");
    }
    if b.f_lo == 0.0 {
        return Ok(RootResult {
            x: b.lo,
            residual: 0.0,
            iterations: 0,
        });
    }
    if b.f_hi == 0.0 {
        return Ok(RootResult {
            x: b.hi,
            residual: 0.0,
            iterations: 0,
        });
    }

    // `x` is the best estimate, `c` keeps the opposite sign.
    let (mut a, mut fa) = (b.lo, b.f_lo);
    let (mut x, mut fx) = (b.hi, b.f_hi);
    let (mut c, mut fc) = (a, fa);
    let mut d = x - a;
    let mut e = d;
    for it in 1..=MAX_ITERATIONS {
        if fx * fc > 0.0 {
            c = a;
            fc = fa;
            d = x - a;
            e = d;
        }
        if fc.abs() < fx.abs() {
            a = x;
            fa = fx;
            x = c;
            fx = fc;
            c = a;
            fc = fa;
        }
        let half_tol = 2.0 * f64::EPSILON * x.abs() + 0.5 * tol;
        let m = 0.5 * (c - x);
        if m.abs() <= half_tol || fx == 0.0 {
            return Ok(RootResult {
                x,
                residual: fx,
                iterations: it,
            });
        }
        if e.abs() >= half_tol && fa.abs() > fx.abs() {
            let s = fx / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fx / fc;
                p = s * (2.0 * m * qa * (qa - r) - (x - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (half_tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = x;
        fa = fx;
        x += if d.abs() > half_tol {
            d
        } else {
            half_tol.copysign(m)
        };
        fx = f(x);
        if !fx.is_finite() {
            return contract(format!(
                "function became non-finite at {x} inside the bracket"
            ));
        }
    }
    Ok(RootResult {
        x,
        residual: fx,
        iterations: MAX_ITERATIONS,
    })
}

/// Scans `[a, b]` on a uniform grid and refines every sign change. Cells with a
/// non-finite endpoint are skipped; a node where `f` is exactly 0 is reported once.
pub fn find_all_roots(
    f: impl Fn(f64) -> f64,
    interval: (f64, f64),
    subdivisions: usize,
    tol: f64,
) -> Result<Vec<RootResult>> {
    if subdivisions < 2 {
        return contract("root scan needs at least 2 subdivisions");
    }
    let (a, b) = interval;
    if !(a < b) {
        return contract(format!("bad scan interval [{a}, {b}]"));
    }
    let node = |i: usize| {
        if i == subdivisions {
            b
        } else {
            a + (b - a) * i as f64 / subdivisions as f64
        }
    };
    let values: Vec<f64> = (0..=subdivisions).map(|i| f(node(i))).collect();
    let mut roots = Vec::new();
    for i in 0..subdivisions {
        let (f0, f1) = (values[i], values[i + 1]);
        if !f0.is_finite() || !f1.is_finite() {
            continue;
        }
        if f0 == 0.0 {
            roots.push(RootResult {
                x: node(i),
                residual: 0.0,
                iterations: 0,
            });
            continue;
        }
        if f1 == 0.0 {
            if i + 1 == subdivisions {
                roots.push(RootResult {
                    x: node(i + 1),
                    residual: 0.0,
                    iterations: 0,
                });
            }
            continue;
        }
        if f0 * f1 < 0.0 {
            let br = Bracket {
                lo: node(i),
                hi: node(i + 1),
                f_lo: f0,
                f_hi: f1,
            };
            roots.push(find_root(&f, &br, tol)?);
        }
    }
    Ok(roots)
}

/// Result of a bounded maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxResult<L> {
    pub location: L,
    pub value: f64,
    pub cell_size: f64,
}

pub type MaxResult1 = MaxResult<f64>;
pub type MaxResult2 = MaxResult<(f64, f64)>;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Grid scan followed by golden-section refinement around the best node.
/// Ties on the grid go to the smallest node.
pub fn maximize_1d(
    f: impl Fn(f64) -> f64,
    interval: (f64, f64),
    grid: usize,
    refine_tol: f64,
) -> Result<MaxResult1> {
    if grid < 16 {
        return contract("1-D maximization needs a grid of at least 16 cells");
    }
    let (a, b) = interval;
    if !(a < b) {
        return contract(format!("bad interval [{a}, {b}]"));
    }
    let h = (b - a) / grid as f64;
    let node = |i: usize| if i == grid { b } else { a + h * i as f64 };
    let mut best = (node(0), f64::NEG_INFINITY);
    let mut best_i = 0;
    for i in 0..=grid {
        let x = node(i);
        let v = f(x);
        if v > best.1 {
            best = (x, v);
            best_i = i;
        }
    }
    let mut lo = node(best_i.saturating_sub(1));
    let mut hi = node((best_i + 1).min(grid));
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > refine_tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let (xr, fr) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    let (location, value) = if fr >= best.1 { (xr, fr) } else { best };
    Ok(MaxResult {
        location,
        value,
        cell_size: hi - lo,
    })
}

/// Finite axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        Rect { x0, x1, y0, y1 }
    }
}

fn scan_2d(f: &impl Fn(f64, f64) -> f64, r: &Rect, grid: usize) -> ((f64, f64), f64, f64, f64) {
    let hx = (r.x1 - r.x0) / grid as f64;
    let hy = (r.y1 - r.y0) / grid as f64;
    let nx = |i: usize| {
        if i == grid {
            r.x1
        } else {
            r.x0 + hx * i as f64
        }
    };
    let ny = |j: usize| {
        if j == grid {
            r.y1
        } else {
            r.y0 + hy * j as f64
        }
    };
    let mut best = ((nx(0), ny(0)), f64::NEG_INFINITY);
    // Row-major over (i, j) with strict improvement: ties keep the
    // lexicographically smallest node.
    for i in 0..=grid {
        let x = nx(i);
        for j in 0..=grid {
            let y = ny(j);
            let v = f(x, y);
            if v > best.1 {
                best = ((x, y), v);
            }
        }
    }
    (best.0, best.1, hx, hy)
}

/// Grid scan over `rect`, then repeated re-scans of a shrinking window around the
/// incumbent until the cell is smaller than `refine_tol`.
pub fn maximize_2d(
    f: impl Fn(f64, f64) -> f64,
    rect: Rect,
    grid: usize,
    refine_tol: f64,
) -> Result<MaxResult2> {
    if grid < 64 {
        return contract("2-D maximization needs a grid of at least 64 cells per axis");
    }
    if !(rect.x0 < rect.x1 && rect.y0 < rect.y1)
        || ![rect.x0, rect.x1, rect.y0, rect.y1]
            .iter()
            .all(|v| v.is_finite())
    {
        return contract(format!("bad rectangle {rect:?}"));
    }
    if !(refine_tol > 0.0) {
        return contract("refine tolerance must be positive");
    }
    let (mut loc, mut val, mut hx, mut hy) = scan_2d(&f, &rect, grid);
    while hx.max(hy) > refine_tol {
        let window = Rect {
            x0: (loc.0 - 2.0 * hx).max(rect.x0),
            x1: (loc.0 + 2.0 * hx).min(rect.x1),
            y0: (loc.1 - 2.0 * hy).max(rect.y0),
            y1: (loc.1 + 2.0 * hy).min(rect.y1),
        };
        let (l, v, nhx, nhy) = scan_2d(&f, &window, grid);
        if v > val {
            loc = l;
            val = v;
        }
        hx = nhx;
        hy = nhy;
    }
    Ok(MaxResult {
        location: loc,
        value: val,
        cell_size: hx.max(hy),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convexity_cubic_root() {
        let f = |r: f64| r * r * r - 4.0 * r * r + 4.0 * r - 1.0;
        let b = Bracket::new(f, 0.0, 0.5).unwrap();
        let r = find_root(f, &b, ROOT_TOL).unwrap();
        assert!((r.x - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn identity_root() {
        let b = Bracket::new(|x| x, -1.0, 1.0).unwrap();
        assert_eq!(find_root(|x| x, &b, ROOT_TOL).unwrap().x, 0.0);
    }

    #[test]
    fn bracket_without_sign_change_rejected() {
        assert!(Bracket::new(|x| x * x + 1.0, -1.0, 1.0).is_err());
        assert!(Bracket::new(|x| x, 1.0, -1.0).is_err());
    }

    #[test]
    fn scan_finds_sine_zeros() {
        let roots = find_all_roots(f64::sin, (1.0, 7.0), 60, ROOT_TOL).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].x - std::f64::consts::PI).abs() < 1e-12);
        assert!((roots[1].x - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn scan_constant_is_empty() {
        assert!(find_all_roots(|_| 1.0, (0.0, 1.0), 10, ROOT_TOL)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn max_1d_parabola() {
        let m = maximize_1d(|x| -(x - 0.5) * (x - 0.5), (0.0, 1.0), 16, 1e-10).unwrap();
        assert!((m.location - 0.5).abs() < 1e-9);
        assert!(m.value.abs() < 1e-15);
    }

    #[test]
    fn max_2d_corner_and_boundary() {
        let r = Rect::new(0.0, 2.0, 0.0, 1.0);
        let m = maximize_2d(|p, x| p + x, r, 64, 1e-8).unwrap();
        assert_eq!(m.location, (2.0, 1.0));
        assert_eq!(m.value, 3.0);
        let m = maximize_2d(|p, x| -p * p - x * x, r, 64, 1e-8).unwrap();
        assert_eq!(m.location, (0.0, 0.0));
    }

    #[test]
    fn max_2d_tie_break_is_lexicographic() {
        let r = Rect::new(0.0, 1.0, 0.0, 1.0);
        let m = maximize_2d(|_, _| 1.0, r, 64, 1e-3).unwrap();
        assert_eq!(m.location, (0.0, 0.0));
    }
}
