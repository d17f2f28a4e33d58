//! Maximizes the third Hankel majorant G(p, x) over [0, 2] x [0, 1] and prints
//! the edge cases.

use cardioid::coeffs::h3_upper_bound;
use cardioid::Result;

fn main() -> Result<()> {
    let grid = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(256);
    let h = h3_upper_bound(grid, 1e-10)?;
    let c = &h.case_report;
    println!("grid {grid}");
    println!(
        "x = 0 edge   max {:.4} at p = {:.6}",
        c.g1.value, c.g1.location
    );
    println!(
        "x = 1 edge   max {:.4} at p = {:.6} (closed form p0 = {:.6})",
        c.g2.value, c.g2.location, c.g2_closed_form
    );
    println!(
        "g3           max {:.4} at x = {:.6}",
        c.g3.value, c.g3.location
    );
    println!(
        "p = 0 edge   max {:.4} at x = {:.6}",
        c.g_on_p0.value, c.g_on_p0.location
    );
    println!("p = 2 edge   {:.4}", c.g_on_p2);
    println!(
        "interior     max {:.4} at ({:.6}, {:.6})",
        c.interior.value, c.interior.p, c.interior.x
    );
    println!(
        "corrected    max {:.4} at ({:.6}, {:.6}, y = {:.3})",
        c.corrected_majorant.value,
        c.corrected_majorant.p,
        c.corrected_majorant.x,
        c.corrected_majorant_y
    );
    println!("|H3(1)| <= {:.6}", h.bound);
    Ok(())
}
