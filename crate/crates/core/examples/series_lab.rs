//! Truncated power series: the cardioid map, its starlike extremal, inverse and
//! logarithmic coefficients.

use cardioid::coeffs::extremal_coeffs;
use cardioid::series::{cardioid_series, PowerSeries};
use cardioid::Result;

fn show(label: &str, s: &PowerSeries) {
    print!("{label:>10}:");
    for c in s.coeffs() {
        print!(" {:>9.6}", c.re);
    }
    println!();
}

fn main() -> Result<()> {
    let p = cardioid_series(7);
    show("1+z e^z", &p);

    // zf'/f = 1 + z e^z
    let f1 = p.from_caratheodory()?;
    show("f1", &f1);
    show("zf1'/f1", &f1.log_derivative()?);
    show("f1^-1", &f1.reversion()?);
    show("d_k", &f1.log_coeffs()?);

    let f2 = extremal_coeffs(2, 8)?;
    show("f2", &f2);
    show("3-fold f1", &extremal_coeffs(1, 4)?.fold_transform(3)?);
    Ok(())
}
