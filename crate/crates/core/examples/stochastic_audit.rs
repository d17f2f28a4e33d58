//! Random members of the class checked against every coefficient bound, plus the
//! Bell-ratio monitor for higher coefficients.

use cardioid::coeffs::{audit_witnesses, stochastic_audit};
use cardioid::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let r = stochastic_audit(seed, samples)?;
    println!(
        "seed {} samples {} mixtures {}",
        r.seed, r.samples, r.mixture_samples
    );
    for l in &r.lines {
        println!(
            "{:<14} max {:.6}  bound {:.6}  margin {:>9.2e}  {}",
            l.functional,
            l.observed_max,
            l.bound,
            l.margin,
            if l.ok { "ok" } else { "VIOLATED" }
        );
    }
    println!("\nk  max |b_k|   B_(k-1)/(k-1)!  violations");
    for c in &r.conjecture {
        println!(
            "{}  {:.6}    {:.6}        {}",
            c.k, c.observed_max, c.conjectured_bound, c.violations
        );
    }
    println!("\nwitnesses");
    for w in audit_witnesses()? {
        println!("  {:.9} / {:.9}  {}", w.value, w.bound, w.attained_at);
    }
    Ok(())
}
