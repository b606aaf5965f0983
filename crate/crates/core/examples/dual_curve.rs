//! Compute the dual curve by elimination and check that its own invariants
//! are the predicted ones.

use plucker::algebra::ExtensionConfig;
use plucker::curve::HomogPoly;
use plucker::plucker::{dual_curve, global_invariants, predict_dual, DualCurveOptions};
use plucker::singular::singular_points;

fn main() -> Result<(), plucker::Error> {
    let cfg = ExtensionConfig::default();
    for text in ["x*z - y^2", "y^2*z - x^2*(x + z)", "y^2*z - x^3", "x^3 + y^3 + z^3"] {
        let f = HomogPoly::parse(text)?;
        let dp = predict_dual(&global_invariants(&f, false, &cfg)?)?.values();
        let points: Vec<_> = singular_points(&f, &cfg)?
            .points
            .into_iter()
            .map(|p| p.point)
            .collect();
        let dual = dual_curve(&f, &points, dp.d_hat, &DualCurveOptions::default())?;
        let fresh = global_invariants(&dual.renamed(["x", "y", "z"]), true, &cfg)?;
        println!("{text}\n  dual: {dual}");
        println!(
            "  predicted ({}, {}, {})  measured ({}, {}, {})",
            dp.d_hat, dp.c_hat_v, dp.n_hat_v, fresh.d, fresh.c_v, fresh.n_v
        );
    }
    Ok(())
}
