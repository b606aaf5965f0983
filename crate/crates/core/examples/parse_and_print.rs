//! Parse homogeneous polynomials, print them in normal form, and parse the
//! printed form back.

use plucker::curve::HomogPoly;

fn main() -> Result<(), plucker::Error> {
    for text in [
        "y^2*z - x^3",
        "(x + y)^3 - 2*x*y*z",
        "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
        "1/2*x^2 - 3/4*y*z",
    ] {
        let f = HomogPoly::parse(text)?;
        let printed = f.to_string();
        assert_eq!(HomogPoly::parse(&printed)?, f);
        println!("degree {}  {text}\n          {printed}", f.degree());
    }
    for bad in ["x^2 + y", "x^2 +", "(x - y)^2 * 0"] {
        println!("{bad:16} -> {}", HomogPoly::parse(bad).unwrap_err());
    }
    Ok(())
}
