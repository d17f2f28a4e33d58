//! Shape of the cardioid domain: extremal values, touching disks, and the
//! largest parabola and ellipse that fit inside.

use cardioid::geometry::{
    function_bounds, inner_disk, largest_inscribed_disk, left_vertex, outer_disk,
    parabola_threshold, right_vertex, smallest_enclosing_disk,
};
use cardioid::radii::inclusion_thresholds;
use cardioid::Result;

fn main() -> Result<()> {
    let fb = function_bounds();
    println!(
        "real trace       ({:.6}, {:.6})",
        left_vertex(),
        right_vertex()
    );
    println!(
        "min Re           {:.6} at theta {:.6}",
        fb.min_re, fb.theta_re
    );
    println!(
        "max Im           {:.6} at theta {:.6}",
        fb.max_im, fb.theta_im
    );
    println!(
        "max |arg|/(pi/2) {:.6} at theta {:.6}",
        fb.max_arg_fraction(),
        fb.theta_arg
    );

    let p = parabola_threshold();
    println!("parabola b       {:.6} at theta {:.6}", p.b, p.theta_0);
    println!("ellipse k        {:.6}", inclusion_thresholds().ellipse_k);

    let dl = largest_inscribed_disk();
    let ds = smallest_enclosing_disk();
    println!(
        "D_L              center {:.6} radius {:.6}",
        dl.center, dl.radius
    );
    println!(
        "D_S              center {:.6} radius {:.6}",
        ds.center, ds.radius
    );

    println!("\n{:>8} {:>10} {:>10} {:>10}", "a", "r_a", "R_a", "theta_a");
    for k in 1..12 {
        let a = left_vertex() + (right_vertex() - left_vertex()) * k as f64 / 12.0;
        let inner = inner_disk(a)?;
        let outer = outer_disk(a)?;
        let theta = outer.theta_a.map_or("-".to_string(), |t| format!("{t:.6}"));
        println!(
            "{a:>8.4} {:>10.6} {:>10.6} {theta:>10}",
            inner.radius, outer.radius
        );
    }
    Ok(())
}
