//! Simple algebraic extensions `Q[t]/(m(t))`.
//!
//! An extension is described by a monic minimal polynomial over the
//! rationals. Elements are reduced residues. Towers are always flattened to a
//! single primitive element (see [`crate::algebra::factor::extend_field`]), so
//! every element carries exactly one field.

use std::fmt;
use std::sync::Arc;

use super::coeff::{Coeff, Rat};
use super::scalar::AlgebraicNumber;
use super::upoly::UPoly;

pub struct NumberField {
    minpoly: UPoly<Rat>,
    /// A complex embedding of the generator, when one has been fixed.
    embedding: Option<AlgebraicNumber>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({:?})", self.minpoly.coeffs())
    }
}

impl NumberField {
    /// `minpoly` must be irreducible over Q; it is made monic here.
    /// Reducible moduli are tolerated by the `try_*` routines, which report
    /// zero divisors instead of panicking.
    pub fn new(minpoly: UPoly<Rat>, embedding: Option<AlgebraicNumber>) -> Arc<Self> {
        assert!(
            minpoly.degree().unwrap_or(0) >= 1,
            "extension modulus must have positive degree"
        );
        Arc::new(NumberField {
            minpoly: minpoly.monic(),
            embedding,
        })
    }

    pub fn minpoly(&self) -> &UPoly<Rat> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn embedding(&self) -> Option<&AlgebraicNumber> {
        self.embedding.as_ref()
    }

    pub fn generator(self: &Arc<Self>) -> NfElem {
        NfElem::from_poly(self, UPoly::x())
    }
}

/// Element of Q or of a fixed simple extension.
#[derive(Clone)]
pub enum NfElem {
    Rat(Rat),
    Alg(Arc<NumberField>, Vec<Rat>),
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfElem::Rat(r) => write!(f, "{r}"),
            NfElem::Alg(_, cs) => {
                write!(f, "[")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{c}*t^{i}")?;
                }
                write!(f, "]")
            }
        }
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (NfElem::Rat(a), NfElem::Rat(b)) => a == b,
            (NfElem::Alg(_, a), NfElem::Alg(_, b)) => a == b,
            _ => false,
        }
    }
}

fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
    Arc::ptr_eq(a, b) || a.minpoly == b.minpoly
}

impl NfElem {
    pub fn from_poly(field: &Arc<NumberField>, p: UPoly<Rat>) -> NfElem {
        let r = p.rem(&field.minpoly);
        match r.degree() {
            None => NfElem::Rat(Rat::zero()),
            Some(0) => NfElem::Rat(r.coeff(0)),
            Some(_) => NfElem::Alg(field.clone(), r.into_coeffs()),
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        match self {
            NfElem::Rat(_) => None,
            NfElem::Alg(k, _) => Some(k),
        }
    }

    /// Representative polynomial in the generator.
    pub fn to_poly(&self) -> UPoly<Rat> {
        match self {
            NfElem::Rat(r) => UPoly::constant(r.clone()),
            NfElem::Alg(_, cs) => UPoly::new(cs.clone()),
        }
    }

    fn combine(&self, other: &Self, op: impl Fn(&UPoly<Rat>, &UPoly<Rat>) -> UPoly<Rat>) -> NfElem {
        let k = match (self.field(), other.field()) {
            (None, None) => None,
            (Some(k), None) | (None, Some(k)) => Some(k),
            (Some(a), Some(b)) => {
                assert!(same_field(a, b), "mixing elements of different extensions");
                Some(a)
            }
        };
        let p = op(&self.to_poly(), &other.to_poly());
        match k {
            None => NfElem::Rat(p.coeff(0)),
            Some(k) => NfElem::from_poly(k, p),
        }
    }

    /// Evaluate at a complex embedding, if the field has one.
    pub fn approx(&self) -> Option<num_complex::Complex64> {
        use num_traits::ToPrimitive;
        match self {
            NfElem::Rat(r) => Some(num_complex::Complex64::new(r.to_f64()?, 0.0)),
            NfElem::Alg(k, cs) => {
                let g = k.embedding()?.approx();
                let mut acc = num_complex::Complex64::new(0.0, 0.0);
                for c in cs.iter().rev() {
                    acc = acc * g + c.to_f64()?;
                }
                Some(acc)
            }
        }
    }
}

impl Coeff for NfElem {
    fn zero() -> Self {
        NfElem::Rat(Rat::zero())
    }
    fn one() -> Self {
        NfElem::Rat(<Rat as Coeff>::one())
    }
    fn is_zero(&self) -> bool {
        matches!(self, NfElem::Rat(r) if r.is_zero())
    }
    fn add(&self, other: &Self) -> Self {
        if let (NfElem::Rat(a), NfElem::Rat(b)) = (self, other) {
            return NfElem::Rat(a + b);
        }
        self.combine(other, |a, b| a.add(b))
    }
    fn sub(&self, other: &Self) -> Self {
        if let (NfElem::Rat(a), NfElem::Rat(b)) = (self, other) {
            return NfElem::Rat(a - b);
        }
        self.combine(other, |a, b| a.sub(b))
    }
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (NfElem::Rat(a), NfElem::Rat(b)) => NfElem::Rat(a * b),
            (NfElem::Rat(a), NfElem::Alg(k, cs)) | (NfElem::Alg(k, cs), NfElem::Rat(a)) => {
                if a.is_zero() {
                    return Self::zero();
                }
                NfElem::Alg(k.clone(), cs.iter().map(|c| c * a).collect())
            }
            _ => self.combine(other, |a, b| a.mul(b)),
        }
    }
    fn neg(&self) -> Self {
        match self {
            NfElem::Rat(a) => NfElem::Rat(-a),
            NfElem::Alg(k, cs) => NfElem::Alg(k.clone(), cs.iter().map(|c| -c).collect()),
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            NfElem::Rat(a) => a.inv().map(NfElem::Rat),
            NfElem::Alg(k, _) => {
                let (g, s, _) = self.to_poly().try_ext_gcd(&k.minpoly)?;
                if g.degree() != Some(0) {
                    return None;
                }
                Some(NfElem::from_poly(k, s))
            }
        }
    }
    fn from_rat(r: Rat) -> Self {
        NfElem::Rat(r)
    }
    fn as_rat(&self) -> Option<Rat> {
        match self {
            NfElem::Rat(r) => Some(r.clone()),
            NfElem::Alg(..) => None,
        }
    }
}

/// Ring map out of `Q(alpha)` determined by the image of the generator.
#[derive(Clone, Debug)]
pub enum FieldMap {
    Identity,
    Generator(NfElem),
}

impl FieldMap {
    pub fn apply(&self, a: &NfElem) -> NfElem {
        match (self, a) {
            (FieldMap::Identity, _) | (_, NfElem::Rat(_)) => a.clone(),
            (FieldMap::Generator(img), NfElem::Alg(_, cs)) => {
                let mut acc = NfElem::zero();
                for c in cs.iter().rev() {
                    acc = acc.mul(img).add(&NfElem::Rat(c.clone()));
                }
                acc
            }
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FieldMap) -> FieldMap {
        match (self, next) {
            (FieldMap::Identity, m) => m.clone(),
            (m, FieldMap::Identity) => m.clone(),
            (FieldMap::Generator(img), m) => FieldMap::Generator(m.apply(img)),
        }
    }
}

/// Evaluate a rational polynomial at an element of a number field.
pub fn eval_rat(p: &UPoly<Rat>, t: &NfElem) -> NfElem {
    let mut acc = NfElem::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(t).add(&NfElem::Rat(c.clone()));
    }
    acc
}
