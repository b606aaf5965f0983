//! Global virtual cusp and node counts, the predicted dual curve, and every
//! Plücker identity with both sides.

use plucker::algebra::ExtensionConfig;
use plucker::curve::HomogPoly;
use plucker::plucker::{global_invariants, plucker_verify, predict_dual};

fn main() -> Result<(), plucker::Error> {
    let cfg = ExtensionConfig::default();
    for text in [
        "y^2*z - x^3",
        "y^2*z^2 - x^4 - y^4",
        "2*(y*z + x*z - x*y)^2 - 9*x*y*z^2",
        "y^2*z^3 - x^5",
    ] {
        let gi = global_invariants(&HomogPoly::parse(text)?, true, &cfg)?;
        let dp = predict_dual(&gi)?.values();
        println!(
            "{text}\n  d={} c_v={} n_v={} g={}  dual: d_hat={} c_hat_v={} n_hat_v={}",
            gi.d, gi.c_v, gi.n_v, gi.g, dp.d_hat, dp.c_hat_v, dp.n_hat_v
        );
        for id in plucker_verify(&gi, &dp) {
            println!("  {:12} {:44} {} = {}", id.name, id.statement, id.lhs, id.rhs);
        }
    }
    Ok(())
}
