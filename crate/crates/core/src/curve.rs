//! Projective plane curves and local germs.

use std::fmt;
use std::sync::Arc;

use crate::algebra::field::{NfElem, NumberField};
use crate::algebra::parse::{format_poly, parse_poly};
use crate::algebra::{Coeff, MPoly, Rat};
use crate::Error;

pub const DEFAULT_VARS: [&str; 3] = ["x", "y", "z"];

/// A nonzero homogeneous polynomial in three named variables with rational
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogPoly {
    vars: [String; 3],
    degree: u32,
    poly: MPoly<Rat>,
}

impl HomogPoly {
    pub fn new(poly: MPoly<Rat>, vars: [&str; 3]) -> Result<Self, Error> {
        assert_eq!(poly.nvars(), 3);
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !poly.is_homogeneous() {
            let (first, second) = offending_pair(&poly, &vars);
            return Err(Error::NonHomogeneous { first, second });
        }
        let degree = poly.total_degree().unwrap();
        Ok(HomogPoly {
            vars: vars.map(str::to_string),
            degree,
            poly,
        })
    }

    /// Parse with the default variable names `x, y, z`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        parse_homogeneous(text, DEFAULT_VARS)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MPoly<Rat> {
        &self.poly
    }

    pub fn vars(&self) -> [&str; 3] {
        [
            self.vars[0].as_str(),
            self.vars[1].as_str(),
            self.vars[2].as_str(),
        ]
    }

    pub fn partial(&self, i: usize) -> MPoly<Rat> {
        self.poly.derivative(i)
    }

    /// Same polynomial under different variable names.
    pub fn renamed(&self, vars: [&str; 3]) -> Self {
        HomogPoly {
            vars: vars.map(str::to_string),
            ..self.clone()
        }
    }

    pub fn eval(&self, p: &[NfElem; 3]) -> NfElem {
        self.poly.map_coeffs(|c| NfElem::Rat(c.clone())).eval(p)
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.poly, &self.vars()))
    }
}

fn offending_pair(p: &MPoly<Rat>, vars: &[&str]) -> (String, String) {
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by(|(a, _), (b, _)| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    let show =
        |(e, c): (&Vec<u32>, &Rat)| format_poly(&MPoly::monomial(e.clone(), c.clone()), vars);
    let top: u32 = terms[0].0.iter().sum();
    let other = terms
        .iter()
        .find(|(e, _)| e.iter().sum::<u32>() != top)
        .unwrap();
    (show(terms[0]), show(*other))
}

/// Parse and expand `text`, requiring a nonzero homogeneous result.
pub fn parse_homogeneous(text: &str, vars: [&str; 3]) -> Result<HomogPoly, Error> {
    HomogPoly::new(parse_poly(text, &vars)?, vars)
}

/// A point of the projective plane over `Q` or a number field, normalized so
/// that coordinate `chart` equals one and later coordinates vanish.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    pub field: Option<Arc<NumberField>>,
    pub coords: [NfElem; 3],
    pub chart: usize,
}

impl ProjPoint {
    pub fn rational(coords: [i64; 3]) -> Self {
        let chart = (0..3)
            .rev()
            .find(|&i| coords[i] != 0)
            .expect("nonzero point");
        let c = NfElem::from_i64(coords[chart]).inv().unwrap();
        let coords = coords.map(|v| NfElem::from_i64(v).mul(&c));
        ProjPoint {
            field: None,
            coords,
            chart,
        }
    }

    /// The two affine coordinates in the chart, in variable order.
    pub fn affine(&self) -> [NfElem; 2] {
        let idx = other_indices(self.chart);
        [self.coords[idx[0]].clone(), self.coords[idx[1]].clone()]
    }
}

/// Variable indices other than `chart`, in increasing order.
pub fn other_indices(chart: usize) -> [usize; 2] {
    match chart {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// A bivariate polynomial over `Q` or a number field, viewed as a germ at the
/// origin.
#[derive(Clone, Debug)]
pub struct LocalPoly {
    pub vars: [String; 2],
    pub field: Option<Arc<NumberField>>,
    pub poly: MPoly<NfElem>,
}

impl LocalPoly {
    pub fn new(poly: MPoly<NfElem>, field: Option<Arc<NumberField>>) -> Self {
        LocalPoly {
            vars: ["x".into(), "y".into()],
            field,
            poly,
        }
    }

    /// A germ with rational coefficients parsed in `x, y`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let p = parse_poly(text, &["x", "y"])?;
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.constant_term().is_zero() {
            return Err(Error::NotOnCurve);
        }
        Ok(Self::from_rational(&p))
    }

    pub fn from_rational(p: &MPoly<Rat>) -> Self {
        Self::new(p.map_coeffs(|c| NfElem::Rat(c.clone())), None)
    }

    /// Order at the origin.
    pub fn order(&self) -> u32 {
        self.poly.order().unwrap_or(0)
    }

    /// The rational polynomial, if every coefficient is rational.
    pub fn as_rational(&self) -> Option<MPoly<Rat>> {
        let mut out = MPoly::zero(2);
        for (e, c) in self.poly.terms() {
            out.add_term(e.clone(), c.as_rat()?);
        }
        Some(out)
    }
}

impl fmt::Display for LocalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(p) => f.write_str(&format_poly(&p, &[&self.vars[0], &self.vars[1]])),
            None => write!(f, "{:?}", self.poly),
        }
    }
}
