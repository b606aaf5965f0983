//! Exact polynomial algebra over the rationals and number fields.

pub mod coeff;
pub mod factor;
pub mod field;
pub mod mpoly;
pub mod parse;
pub mod roots;
pub mod scalar;
pub mod upoly;

pub use coeff::{rat, ratio, Coeff, Rat};
pub use mpoly::MPoly;
pub use scalar::{ExactScalar, ExtensionConfig};
pub use upoly::UPoly;

/// Print a univariate rational polynomial in the variable `var`.
pub fn upoly_to_string(p: &UPoly<Rat>, var: &str) -> String {
    parse::format_poly(&MPoly::from_upoly(1, 0, p), &[var])
}
