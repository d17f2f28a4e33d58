//! Every radius in the catalog with its default parameters, plus a sweep of the
//! starlikeness radius against its sharp oracle.

use cardioid::cli::default_query;
use cardioid::radii::{alpha_0, evaluate, solve_radius, Entry, RadiusQuery, CATALOG};
use cardioid::subordination::starlike_alpha_oracle;
use cardioid::Result;

fn main() -> Result<()> {
    println!(
        "{:<22} {:>12} {:>12} {:>10} sharp",
        "entry", "radius", "closed form", "residual"
    );
    for e in CATALOG {
        let r = solve_radius(&default_query(e))?;
        let cf = r.closed_form.map_or("-".into(), |v| format!("{v:.9}"));
        let res = r.residual.map_or("-".into(), |v| format!("{v:.1e}"));
        let sharp = r.sharp.map_or("n/a", |s| if s { "yes" } else { "no" });
        println!(
            "{:<22} {:>12.9} {cf:>12} {res:>10} {sharp}",
            e.name(),
            r.value
        );
    }

    println!("\nstarlike of order alpha, alpha_0 = {:.6}", alpha_0());
    for alpha in [0.75, 0.8, 0.85, 0.9, 0.95] {
        let r = evaluate(&RadiusQuery::new(Entry::StarlikeAlphaStmt).alpha(alpha))?.value;
        println!(
            "  alpha {alpha:.2}: {r:.9} (oracle {:.9})",
            starlike_alpha_oracle(alpha).value
        );
    }
    Ok(())
}
