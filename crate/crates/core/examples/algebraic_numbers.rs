//! Exact algebraic numbers: roots with isolating boxes, field arithmetic,
//! and resultants as eliminants.

use num_traits::ToPrimitive;
use plucker::algebra::parse::{format_poly, parse_poly};
use plucker::algebra::scalar::AlgebraicNumber;
use plucker::algebra::{rat, ExactScalar, ExtensionConfig, UPoly};

fn main() -> Result<(), plucker::Error> {
    let t2_minus_2 = UPoly::new(vec![rat(-2), rat(0), rat(1)]);
    let sqrt2 = AlgebraicNumber::roots_of(&t2_minus_2)?
        .into_iter()
        .find(|a| a.approx().re > 0.0)
        .unwrap();
    let b = sqrt2.isolating_box();
    let width = (&b.re_hi - &b.re_lo).to_f64().unwrap();
    println!("sqrt 2 ~ {:.15}, isolating box of width {width:.1e}", b.re_lo.to_f64().unwrap());

    let cfg = ExtensionConfig::default();
    let a = ExactScalar::from_algebraic(sqrt2);
    let square = a.mul(&a, &cfg)?;
    println!("sqrt2 * sqrt2 = {square}");
    let inv = a.inv()?;
    println!("1 / sqrt2 = {inv}, sign {}", inv.sign_re()?);

    let vars = ["x", "y"];
    let f = parse_poly("x^2 + y^2 - 1", &vars)?;
    let g = parse_poly("y - x^2", &vars)?;
    let r = f.resultant(&g, 1);
    println!("Res_y({}, {}) = {}", format_poly(&f, &vars), format_poly(&g, &vars), format_poly(&r, &vars));
    let h = parse_poly("(x - y)*(x + 2*y)", &vars)?;
    let k = parse_poly("(x - y)*(x^2 + y)", &vars)?;
    println!("gcd = {}", format_poly(&h.gcd(&k), &vars));
    Ok(())
}
