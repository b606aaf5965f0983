//! Intersect a curve with its Hessian: 8 at a cusp, 6 plus the branch flexes
//! at a node, and the remaining intersections at the flexes of the curve.

use plucker::analysis::{analyze, AnalysisOptions};
use plucker::curve::HomogPoly;

fn main() -> Result<(), plucker::Error> {
    let opts = AnalysisOptions {
        assume_irreducible: true,
        hessian: true,
        ..AnalysisOptions::default()
    };
    for text in [
        "x^3 + y^3 + z^3",
        "y^2*z - x^2*(x + z)",
        "y^2*z - x^3",
        "2*(y*z + x*z - x*y)^2 - 9*x*y*z^2",
        "4*x^4 - 16*x^3*y + 4*x^3*z + 16*x^2*y^2 + 9*x^2*z^2 - 16*x*y^2*z \
         - 36*x*y*z^2 + 38*x*z^3 + 52*y^2*z^2 - 52*y*z^3 + 21*z^4",
    ] {
        let report = analyze(&HomogPoly::parse(text)?, &opts)?;
        let h = report.hessian.expect("Hessian requested");
        let dual = report.dual.expect("irreducible curve");
        println!("{text}");
        for p in &h.per_point {
            println!(
                "  point {}  (C.H)_p = {}  expected {:?}  branch flexes {:?}",
                p.point, p.intersection, p.expected, p.branch_flexes
            );
        }
        println!(
            "  Bezout {}  flexes {} + {}  c_hat_v {}  passed {}",
            h.bezout_total, h.inflection_tally, h.branch_flex_tally, dual.c_hat_v, h.passed
        );
    }
    Ok(())
}
