//! Milnor numbers and local intersection multiplicities at the origin, and
//! delta recovered as (mu + r - 1) / 2.

use plucker::algebra::ExtensionConfig;
use plucker::curve::LocalPoly;
use plucker::local::{analyze_germ, local_intersection, milnor_number};

fn main() -> Result<(), plucker::Error> {
    for text in ["y^2 - x^3", "x^3 + y^5", "x*y*(x - y)*(x + y)", "y^3 - x^7 + x^4*y"] {
        let f = LocalPoly::parse(text)?;
        let l = analyze_germ(&f, &ExtensionConfig::default())?;
        println!(
            "{text:22} mu = {:2}  r = {}  delta = {}",
            milnor_number(&f)?,
            l.r,
            l.delta
        );
    }
    for (a, b) in [("y - x^2", "y"), ("y^2 - x^3", "y^2 - x^5"), ("y^2 - x^3", "y^3 - x^2")] {
        let i = local_intersection(&LocalPoly::parse(a)?.poly, &LocalPoly::parse(b)?.poly)?;
        println!("I_0({a}, {b}) = {i}");
    }
    match milnor_number(&LocalPoly::parse("y^2")?) {
        Err(e) => println!("y^2: {e}"),
        Ok(mu) => println!("y^2: mu = {mu}"),
    }
    Ok(())
}
