use cardioid::series::{cardioid_series, PowerSeries};
use cardioid::Complex64;
use proptest::prelude::*;

const N: usize = 10;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: &PowerSeries, b: &PowerSeries, tol: f64) -> bool {
    a.order() == b.order()
        && a.coeffs()
            .iter()
            .zip(b.coeffs())
            .all(|(x, y)| (x - y).norm() <= tol * (1.0 + y.norm()))
}

fn coeff_vec(len: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| c(a, b)), len)
}

fn series() -> impl Strategy<Value = PowerSeries> {
    coeff_vec(N).prop_map(PowerSeries::new)
}

fn unit_series() -> impl Strategy<Value = PowerSeries> {
    coeff_vec(N - 1).prop_map(|rest| {
        let mut v = vec![c(1.0, 0.0)];
        v.extend(rest.into_iter().map(|x| x * 0.5));
        PowerSeries::new(v)
    })
}

fn normalized() -> impl Strategy<Value = PowerSeries> {
    coeff_vec(N - 2).prop_map(|rest| {
        let mut v = vec![c(0.0, 0.0), c(1.0, 0.0)];
        v.extend(rest.into_iter().map(|x| x * 0.5));
        PowerSeries::new(v)
    })
}

// composition by repeated multiplication, O(N^3)
fn naive_compose(outer: &PowerSeries, inner: &PowerSeries) -> PowerSeries {
    let n = outer.order();
    let mut acc = vec![c(0.0, 0.0); n + 1];
    let mut power = PowerSeries::one(n);
    for k in 0..=n {
        for (i, v) in power.coeffs().iter().enumerate() {
            acc[i] += outer.coeff(k) * v;
        }
        power = power.mul(inner).unwrap();
    }
    PowerSeries::new(acc)
}

// reversion by fixed point g ← z − (f(g) − g)
fn naive_reversion(f: &PowerSeries) -> PowerSeries {
    let n = f.order();
    let z = PowerSeries::identity(n);
    let mut g = z.clone();
    for _ in 0..n {
        let fg = naive_compose(f, &g);
        g = z.sub(&fg.sub(&g).unwrap()).unwrap();
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_commutative(a in series(), b in series()) {
        prop_assert!(close(&a.mul(&b).unwrap(), &b.mul(&a).unwrap(), 1e-12));
    }

    #[test]
    fn product_is_associative(a in series(), b in series(), d in series()) {
        let l = a.mul(&b).unwrap().mul(&d).unwrap();
        let r = a.mul(&b.mul(&d).unwrap()).unwrap();
        prop_assert!(close(&l, &r, 1e-11));
    }

    #[test]
    fn product_distributes(a in series(), b in series(), d in series()) {
        let l = a.mul(&b.add(&d).unwrap()).unwrap();
        let r = a.mul(&b).unwrap().add(&a.mul(&d).unwrap()).unwrap();
        prop_assert!(close(&l, &r, 1e-11));
    }

    #[test]
    fn exp_turns_sums_into_products(a in series(), b in series()) {
        let mut a = a.into_coeffs();
        let mut b = b.into_coeffs();
        a[0] = c(0.0, 0.0);
        b[0] = c(0.0, 0.0);
        let (a, b) = (PowerSeries::new(a), PowerSeries::new(b));
        let l = a.add(&b).unwrap().exp().unwrap();
        let r = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
        prop_assert!(close(&l, &r, 1e-9));
    }

    #[test]
    fn log_inverts_exp(u in unit_series()) {
        prop_assert!(close(&u.ln().unwrap().exp().unwrap(), &u, 1e-10));
    }

    #[test]
    fn division_inverts_product(a in series(), u in unit_series()) {
        prop_assert!(close(&a.mul(&u).unwrap().div(&u).unwrap(), &a, 1e-9));
    }

    #[test]
    fn reversion_matches_fixed_point(f in normalized()) {
        prop_assert!(close(&f.reversion().unwrap(), &naive_reversion(&f), 1e-8));
    }

    #[test]
    fn compose_matches_powers(outer in series(), inner in normalized()) {
        prop_assert!(close(&outer.compose(&inner).unwrap(), &naive_compose(&outer, &inner), 1e-9));
    }

    #[test]
    fn caratheodory_round_trip(p in unit_series()) {
        // f = z·exp(∫(p − 1)/z) so zf'/f = p
        let f = p.from_caratheodory().unwrap();
        let back = f.log_derivative().unwrap();
        prop_assert!(close(&back, &p, 1e-10));
    }

    #[test]
    fn log_coeffs_halve_the_log(f in normalized()) {
        let d = f.log_coeffs().unwrap();
        let log = f.div_z().unwrap().ln().unwrap();
        for k in 1..d.order() {
            prop_assert!((d.coeff(k) * 2.0 - log.coeff(k)).norm() < 1e-10);
        }
    }

    #[test]
    fn eval_matches_power_sum(a in series(), re in -0.5..0.5f64, im in -0.5..0.5f64) {
        let z = c(re, im);
        let direct: Complex64 = a.coeffs().iter().enumerate().map(|(k, v)| v * z.powu(k as u32)).sum();
        prop_assert!((a.eval(z) - direct).norm() < 1e-12);
    }
}

#[test]
fn cardioid_series_is_one_plus_z_exp_z() {
    let s = cardioid_series(8);
    let mut fact = 1.0;
    assert_eq!(s.coeff(0), c(1.0, 0.0));
    for k in 1..8 {
        if k > 1 {
            fact *= (k - 1) as f64;
        }
        assert!((s.coeff(k).re - 1.0 / fact).abs() < 1e-15);
    }
}

#[test]
fn fold_transform_keeps_only_every_mth_power() {
    let f = PowerSeries::exp_z(6).mul_z();
    let g = f.fold_transform(3).unwrap();
    assert_eq!(g.order(), 3 * (f.order() - 1) + 1);
    for k in 0..g.order() {
        if k % 3 != 1 {
            assert!(g.coeff(k).norm() < 1e-14, "k = {k}");
        }
    }
    assert!((g.coeff(1) - c(1.0, 0.0)).norm() < 1e-14);
}

#[test]
fn order_mismatch_is_rejected() {
    let a = PowerSeries::one(4);
    let b = PowerSeries::one(5);
    assert!(a.mul(&b).is_err());
    assert!(PowerSeries::one(4).compose(&PowerSeries::one(4)).is_err());
}
