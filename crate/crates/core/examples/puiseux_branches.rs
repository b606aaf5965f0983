//! Newton-Puiseux branches of plane curve germs: multiplicity, conjugate
//! orbit size and the leading exponents of each branch.

use plucker::algebra::ExtensionConfig;
use plucker::curve::LocalPoly;
use plucker::local::puiseux_branches;

fn main() -> Result<(), plucker::Error> {
    let cfg = ExtensionConfig::default();
    for text in [
        "y^2 - x^3",
        "y^2 - x^4 - x^5",
        "(y^2 - x^3)*(y^2 + x^3)",
        "y^3 - x^7",
        "(y^2 - 2*x^2)*(y - x^3)",
    ] {
        println!("{text}");
        for b in puiseux_branches(&LocalPoly::parse(text)?, &cfg)? {
            let terms: Vec<String> = b
                .expansion
                .iter()
                .map(|t| format!("x^{} [{}]", t.exponent, t.face_factor))
                .collect();
            println!(
                "  multiplicity {}  orbit {}  {}",
                b.multiplicity,
                b.orbit_size,
                terms.join(" + ")
            );
        }
    }
    Ok(())
}
