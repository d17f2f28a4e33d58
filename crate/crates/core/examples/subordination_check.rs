//! Checks candidate functions q with q(0) = 1 for subordination to 1 + z e^z by
//! sampling q on a circle, and reports sharpness of the named-class radii.

use cardioid::geometry::{cardioid, CLOSURE_TOL};
use cardioid::radii::{RadiusQuery, NAMED_CLASSES};
use cardioid::subordination::{radius_sharpness, subordinate_to_cardioid, BoundarySampler};
use cardioid::{Complex64, Result};

fn main() -> Result<()> {
    let one = Complex64::new(1.0, 0.0);
    let candidates: Vec<(&str, Box<dyn Fn(Complex64) -> Complex64>)> = vec![
        ("1 + z e^z", Box::new(cardioid)),
        ("1 + z/e", Box::new(move |z| one + z / std::f64::consts::E)),
        ("1 + z/2", Box::new(move |z| one + z * 0.5)),
        ("(1 + z)/(1 - z)", Box::new(move |z| (one + z) / (one - z))),
        ("e^z", Box::new(|z: Complex64| z.exp())),
    ];
    for (name, q) in &candidates {
        for rho in [0.5, 0.9, 1.0] {
            let s = BoundarySampler::new(q, rho, 2048);
            let ok = subordinate_to_cardioid(&s, -CLOSURE_TOL)?;
            let (excess, at) = s.max_excess();
            println!("{name:<16} rho {rho:.1}: {ok:<5}  max excess {excess:>9.5} at {at:>8.5}");
        }
    }

    println!();
    for e in NAMED_CLASSES {
        let s = radius_sharpness(&RadiusQuery::new(e), 1e-3)?;
        println!(
            "{:<14} R = {:.6}  contact {:.1e}  beyond {:.1e}",
            e.name(),
            s.radius,
            s.contact_excess,
            s.max_excess_beyond
        );
    }
    Ok(())
}
