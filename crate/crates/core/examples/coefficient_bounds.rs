//! Sharp coefficient functionals and the functions that attain them.

use cardioid::coeffs::{
    b2b3_minus_b4, fekete_szego_bound, fekete_szego_witness, h3_triangle_bound, inverse_fs_bound,
    inverse_fs_bound_piecewise, nfold2_class_maximum, nfold_h3, triangle_ingredients,
};
use cardioid::Result;

fn main() -> Result<()> {
    println!(
        "{:>6} {:>10} {:>10} {:>8} {:>14}",
        "mu", "FS bound", "witness", "", "inverse FS"
    );
    for i in 0..=8 {
        let mu = -1.0 + 0.5 * i as f64;
        let w = fekete_szego_witness(mu)?;
        println!(
            "{mu:>6.2} {:>10.6} {:>10.6} {:>8} {:>7.3} ({:.3})",
            fekete_szego_bound(mu),
            w.value,
            w.attained_at,
            inverse_fs_bound(mu),
            inverse_fs_bound_piecewise(mu)
        );
    }

    let b = b2b3_minus_b4()?;
    println!(
        "\n|b2 b3 - b4| <= {:.9}, witness {:.9} ({})",
        b.bound, b.value, b.attained_at
    );

    let t = triangle_ingredients()?;
    println!("triangle ingredients {t:?}");
    println!(
        "|H3(1)| by triangle inequality <= {:.6}",
        h3_triangle_bound()?
    );

    for fold in [3, 2] {
        let r = nfold_h3(fold)?;
        println!(
            "{fold}-fold |H3(1)|: bound {:.6}, witness {:.6}",
            r.bound, r.value
        );
    }
    let m = nfold2_class_maximum()?;
    println!("2-fold class maximum {:.6} at {}", m.value, m.attained_at);
    Ok(())
}
