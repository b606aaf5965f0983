//! Singular points of projective curves, one record per Galois orbit, with
//! exact coordinates.

use plucker::algebra::ExtensionConfig;
use plucker::curve::HomogPoly;
use plucker::singular::singular_points;

fn main() -> Result<(), plucker::Error> {
    let cfg = ExtensionConfig::default();
    for text in [
        "y^2*z - x^3",
        "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
        "y*(x^2 + y^2 + z^2)",
        "(x^2 - 2*z^2)*(y^2 - 3*z^2)",
    ] {
        let f = HomogPoly::parse(text)?;
        let locus = singular_points(&f, &cfg)?;
        println!("{f}");
        for p in &locus.points {
            let [a, b] = &p.coords;
            println!(
                "  chart {}  ({a}, {b})  residue degree {}  orbit {}",
                p.chart, p.residue_degree, p.orbit_size
            );
        }
    }
    Ok(())
}
