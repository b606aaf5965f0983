//! Exact scalars: rationals, or algebraic numbers given by an irreducible
//! minimal polynomial and a rational isolating box.
//!
//! Arithmetic composes minimal polynomials through resultants, splits the
//! composite with the bounded factorizer, and selects the correct root by
//! rectangle interval arithmetic on refined input boxes.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Signed;

use super::coeff::{rat, Coeff, Rat};
use super::factor::split_squarefree;
use super::field::{NfElem, NumberField};
use super::mpoly::MPoly;
use super::roots::{isolate_complex_roots, primitive_integer, RBox};
use super::upoly::UPoly;
use crate::Error;

const BASE_BITS: u32 = 24;
const MAX_BITS: u32 = 400;

/// Limits on the degrees of algebraic numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtensionConfig {
    /// Largest minimal polynomial degree a scalar may have.
    pub bound: usize,
    /// Largest composite degree (product of operand degrees) an operation
    /// may form before splitting.
    pub product_bound: usize,
}

impl Default for ExtensionConfig {
    fn default() -> Self {
        ExtensionConfig {
            bound: 4,
            product_bound: 16,
        }
    }
}

/// Closed real interval.
#[derive(Clone, Debug, PartialEq)]
struct Iv {
    lo: Rat,
    hi: Rat,
}

impl Iv {
    fn add(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }
    fn neg(&self) -> Iv {
        Iv {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
    fn sub(&self, o: &Iv) -> Iv {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Iv) -> Iv {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Iv { lo, hi }
    }
    fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }
    fn recip(&self) -> Option<Iv> {
        if self.contains_zero() {
            return None;
        }
        Some(Iv {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }
    fn point(r: &Rat) -> Iv {
        Iv {
            lo: r.clone(),
            hi: r.clone(),
        }
    }
}

#[derive(Clone, Debug)]
struct CBox {
    re: Iv,
    im: Iv,
}

impl CBox {
    fn of(b: &RBox) -> CBox {
        CBox {
            re: Iv {
                lo: b.re_lo.clone(),
                hi: b.re_hi.clone(),
            },
            im: Iv {
                lo: b.im_lo.clone(),
                hi: b.im_hi.clone(),
            },
        }
    }
    fn point(r: &Rat) -> CBox {
        CBox {
            re: Iv::point(r),
            im: Iv::point(&Rat::zero()),
        }
    }
    fn to_rbox(&self) -> RBox {
        RBox {
            re_lo: self.re.lo.clone(),
            re_hi: self.re.hi.clone(),
            im_lo: self.im.lo.clone(),
            im_hi: self.im.hi.clone(),
        }
    }
    fn add(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }
    fn mul(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    fn neg(&self) -> CBox {
        CBox {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
    fn recip(&self) -> Option<CBox> {
        let n = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        // |z|^2 interval must avoid zero; tighten its lower end to >= 0
        let n = Iv {
            lo: if n.lo.is_negative() {
                Rat::zero()
            } else {
                n.lo
            },
            hi: n.hi,
        };
        let inv = n.recip()?;
        Some(CBox {
            re: self.re.mul(&inv),
            im: self.im.neg().mul(&inv),
        })
    }
}

/// A root of an irreducible integer polynomial of degree >= 2, singled out
/// by a box that contains no other root.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: UPoly<Rat>,
    bx: RBox,
}

impl AlgebraicNumber {
    /// All roots of an irreducible polynomial, in isolation order.
    pub fn roots_of(minpoly: &UPoly<Rat>) -> Result<Vec<AlgebraicNumber>, Error> {
        let m = primitive_integer(minpoly);
        let boxes = isolate_complex_roots(&m, BASE_BITS).ok_or(Error::Precision)?;
        let mut out: Vec<AlgebraicNumber> = boxes
            .into_iter()
            .map(|bx| AlgebraicNumber {
                minpoly: m.clone(),
                bx,
            })
            .collect();
        out.sort_by(|a, b| {
            let (ca, cb) = (a.bx.center(), b.bx.center());
            ca.re.cmp(&cb.re).then(ca.im.cmp(&cb.im))
        });
        Ok(out)
    }

    pub fn minpoly(&self) -> &UPoly<Rat> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn isolating_box(&self) -> &RBox {
        &self.bx
    }

    pub fn approx(&self) -> Complex64 {
        self.bx.center().to_c64()
    }

    /// Re-isolate at `bits` of precision and return the box holding the same
    /// root.
    pub fn refine(&self, bits: u32) -> Result<AlgebraicNumber, Error> {
        let mut b = bits.max(BASE_BITS);
        while b <= MAX_BITS {
            let boxes = isolate_complex_roots(&self.minpoly, b).ok_or(Error::Precision)?;
            let hits: Vec<&RBox> = boxes.iter().filter(|nb| nb.intersects(&self.bx)).collect();
            if hits.len() == 1 {
                return Ok(AlgebraicNumber {
                    minpoly: self.minpoly.clone(),
                    bx: hits[0].clone(),
                });
            }
            b += 32;
        }
        Err(Error::Precision)
    }

    /// Among the roots of `poly` (square-free), the unique one lying in a
    /// region that is known to contain exactly one root of it.
    fn select(poly: &UPoly<Rat>, region: &RBox, bits: u32) -> Result<Option<RBox>, Error> {
        let boxes = isolate_complex_roots(poly, bits).ok_or(Error::Precision)?;
        let hits: Vec<RBox> = boxes.into_iter().filter(|b| b.intersects(region)).collect();
        Ok(match hits.len() {
            0 => None,
            1 => Some(hits.into_iter().next().unwrap()),
            _ => return Err(Error::Ambiguous),
        })
    }

    fn same_root(&self, other: &AlgebraicNumber) -> Result<bool, Error> {
        if self.minpoly != other.minpoly {
            return Ok(false);
        }
        let mut bits = BASE_BITS;
        while bits <= MAX_BITS {
            let a = self.refine(bits)?;
            let b = other.refine(bits)?;
            if !a.bx.intersects(&b.bx) {
                return Ok(false);
            }
            if a.bx == b.bx {
                return Ok(true);
            }
            bits += 32;
        }
        Err(Error::Precision)
    }
}

/// Rational or algebraic scalar.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum ExactScalar {
    Rational(Rat),
    Algebraic(AlgebraicNumber),
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(r) => write!(f, "{r}"),
            ExactScalar::Algebraic(a) => {
                let z = a.approx();
                write!(
                    f,
                    "root of {} near {:.6}{:+.6}i",
                    crate::algebra::upoly_to_string(&a.minpoly, "t"),
                    z.re,
                    z.im
                )
            }
        }
    }
}

/// Bivariate lift `p(z - t)` (add) or `t^n p(z / t)` (mul) in variables (z, t).
fn compose_for(op: Op, p: &UPoly<Rat>) -> MPoly<Rat> {
    let n = p.degree().unwrap() as u32;
    let mut acc = MPoly::zero(2);
    for (k, c) in p.coeffs().iter().enumerate() {
        let k = k as u32;
        let term = match op {
            Op::Add => MPoly::var(2, 0).sub(&MPoly::var(2, 1)).pow(k),
            Op::Mul => MPoly::monomial(vec![k, n - k], rat(1)),
        };
        acc = acc.add(&term.scale(c));
    }
    acc
}

#[derive(Clone, Copy)]
enum Op {
    Add,
    Mul,
}

impl ExactScalar {
    pub fn rational(r: Rat) -> Self {
        ExactScalar::Rational(r)
    }

    pub fn int(n: i64) -> Self {
        ExactScalar::Rational(rat(n))
    }

    /// Build from a minimal polynomial root; degree-one polynomials collapse
    /// to rationals.
    pub fn from_algebraic(a: AlgebraicNumber) -> Self {
        if a.degree() == 1 {
            let m = &a.minpoly;
            return ExactScalar::Rational(-m.coeff(0) / m.coeff(1));
        }
        ExactScalar::Algebraic(a)
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Algebraic(_) => None,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            ExactScalar::Rational(_) => 1,
            ExactScalar::Algebraic(a) => a.degree(),
        }
    }

    /// Minimal polynomial as a primitive integer polynomial.
    pub fn minpoly(&self) -> UPoly<Rat> {
        match self {
            ExactScalar::Rational(r) => primitive_integer(&UPoly::new(vec![-r.clone(), rat(1)])),
            ExactScalar::Algebraic(a) => a.minpoly.clone(),
        }
    }

    pub fn approx(&self) -> Complex64 {
        match self {
            ExactScalar::Rational(r) => Complex64::new(crate::algebra::roots::c64_of(r), 0.0),
            ExactScalar::Algebraic(a) => a.approx(),
        }
    }

    fn enclosure(&self, bits: u32) -> Result<CBox, Error> {
        Ok(match self {
            ExactScalar::Rational(r) => CBox::point(r),
            ExactScalar::Algebraic(a) => CBox::of(&a.refine(bits)?.bx),
        })
    }

    pub fn neg(&self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Algebraic(a) => {
                let m = a.minpoly.compose(&UPoly::new(vec![rat(0), rat(-1)]));
                let bx = CBox::of(&a.bx).neg().to_rbox();
                ExactScalar::Algebraic(AlgebraicNumber {
                    minpoly: primitive_integer(&m),
                    bx,
                })
            }
        }
    }

    pub fn add(&self, o: &ExactScalar, cfg: &ExtensionConfig) -> Result<ExactScalar, Error> {
        self.binary(o, Op::Add, cfg)
    }

    pub fn sub(&self, o: &ExactScalar, cfg: &ExtensionConfig) -> Result<ExactScalar, Error> {
        self.binary(&o.neg(), Op::Add, cfg)
    }

    pub fn mul(&self, o: &ExactScalar, cfg: &ExtensionConfig) -> Result<ExactScalar, Error> {
        self.binary(o, Op::Mul, cfg)
    }

    pub fn inv(&self) -> Result<ExactScalar, Error> {
        match self {
            ExactScalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(ExactScalar::Rational(r.recip()))
                }
            }
            ExactScalar::Algebraic(a) => {
                let mut cs = a.minpoly.coeffs().to_vec();
                cs.reverse();
                let m = primitive_integer(&UPoly::new(cs));
                let mut bits = BASE_BITS;
                while bits <= MAX_BITS {
                    let enc = CBox::of(&a.refine(bits)?.bx);
                    if let Some(r) = enc.recip() {
                        match AlgebraicNumber::select(&m, &r.to_rbox(), bits) {
                            Ok(Some(bx)) => {
                                return Ok(ExactScalar::Algebraic(AlgebraicNumber {
                                    minpoly: m,
                                    bx,
                                }))
                            }
                            Ok(None) => return Err(Error::Precision),
                            Err(Error::Ambiguous) => {}
                            Err(e) => return Err(e),
                        }
                    }
                    bits += 32;
                }
                Err(Error::Precision)
            }
        }
    }

    fn binary(&self, o: &ExactScalar, op: Op, cfg: &ExtensionConfig) -> Result<ExactScalar, Error> {
        if let (ExactScalar::Rational(a), ExactScalar::Rational(b)) = (self, o) {
            return Ok(ExactScalar::Rational(match op {
                Op::Add => a + b,
                Op::Mul => a * b,
            }));
        }
        if let Op::Mul = op {
            if self.is_zero() || o.is_zero() {
                return Ok(ExactScalar::int(0));
            }
        }
        let composite = self.degree() * o.degree();
        if composite > cfg.product_bound {
            return Err(Error::ExtensionOverflow {
                certificate: format!(
                    "composite degree {composite} exceeds product bound {}",
                    cfg.product_bound
                ),
            });
        }
        let ma = MPoly::from_upoly(2, 1, &self.minpoly());
        let mb = compose_for(op, &o.minpoly());
        let r = ma.resultant(&mb, 1).to_upoly(0);
        let r = r.squarefree_part();
        let split = split_squarefree(&r, cfg.bound);
        let mut bits = BASE_BITS;
        while bits <= MAX_BITS {
            let ea = self.enclosure(bits)?;
            let eb = o.enclosure(bits)?;
            let enc = match op {
                Op::Add => ea.add(&eb),
                Op::Mul => ea.mul(&eb),
            }
            .to_rbox();
            // the true value is a root of r; find which factor owns it
            let mut owners = Vec::new();
            let mut ambiguous = false;
            for f in split.factors.iter().chain(std::iter::once(&split.leftover)) {
                if f.degree().unwrap_or(0) == 0 {
                    continue;
                }
                match AlgebraicNumber::select(f, &enc, bits) {
                    Ok(Some(bx)) => owners.push((f.clone(), bx)),
                    Ok(None) => {}
                    Err(Error::Ambiguous) => ambiguous = true,
                    Err(e) => return Err(e),
                }
            }
            if !ambiguous && owners.len() == 1 {
                let (f, bx) = owners.pop().unwrap();
                if f == split.leftover {
                    return Err(Error::ExtensionOverflow {
                        certificate: crate::algebra::upoly_to_string(&f, "t"),
                    });
                }
                return Ok(ExactScalar::from_algebraic(AlgebraicNumber {
                    minpoly: f,
                    bx,
                }));
            }
            bits += 32;
        }
        Err(Error::Precision)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExactScalar::Rational(r) if r.is_zero())
    }

    /// Exact equality.
    pub fn equals(&self, o: &ExactScalar) -> Result<bool, Error> {
        match (self, o) {
            (ExactScalar::Rational(a), ExactScalar::Rational(b)) => Ok(a == b),
            (ExactScalar::Algebraic(a), ExactScalar::Algebraic(b)) => a.same_root(b),
            _ => Ok(false),
        }
    }

    /// Sign of the real part.
    pub fn sign_re(&self) -> Result<i8, Error> {
        match self {
            ExactScalar::Rational(r) => Ok(sign(r)),
            ExactScalar::Algebraic(a) => {
                let m = &a.minpoly;
                let mirrored = primitive_integer(&m.compose(&UPoly::new(vec![rat(0), rat(-1)])));
                if mirrored == *m {
                    let reflected = AlgebraicNumber {
                        minpoly: m.clone(),
                        bx: a.bx.reflect_imag_axis(),
                    };
                    if a.same_root(&reflected)? {
                        return Ok(0);
                    }
                }
                let mut bits = BASE_BITS;
                while bits <= MAX_BITS {
                    let b = a.refine(bits)?.bx;
                    if b.re_lo.is_positive() {
                        return Ok(1);
                    }
                    if b.re_hi.is_negative() {
                        return Ok(-1);
                    }
                    bits += 32;
                }
                Err(Error::Precision)
            }
        }
    }

    /// Sign of the imaginary part.
    pub fn sign_im(&self) -> Result<i8, Error> {
        match self {
            ExactScalar::Rational(_) => Ok(0),
            ExactScalar::Algebraic(a) => {
                let conj = AlgebraicNumber {
                    minpoly: a.minpoly.clone(),
                    bx: a.bx.conj(),
                };
                if a.same_root(&conj)? {
                    return Ok(0);
                }
                let mut bits = BASE_BITS;
                while bits <= MAX_BITS {
                    let b = a.refine(bits)?.bx;
                    if b.im_lo.is_positive() {
                        return Ok(1);
                    }
                    if b.im_hi.is_negative() {
                        return Ok(-1);
                    }
                    bits += 32;
                }
                Err(Error::Precision)
            }
        }
    }

    /// Value of `p(generator)` for a polynomial in the generator of a field
    /// whose embedding is `gen`.
    pub fn from_field_element(p: &UPoly<Rat>, gen: &AlgebraicNumber) -> Result<ExactScalar, Error> {
        let p = p.rem(&primitive_integer(&gen.minpoly).monic());
        if p.degree().unwrap_or(0) == 0 {
            return Ok(ExactScalar::Rational(p.coeff(0)));
        }
        // characteristic polynomial Res_t(m(t), z - p(t)); its square-free part
        // is the minimal polynomial because m is irreducible
        let m = MPoly::from_upoly(2, 1, &gen.minpoly);
        let zp = MPoly::var(2, 0).sub(&MPoly::from_upoly(2, 1, &p));
        let charpoly = m.resultant(&zp, 1).to_upoly(0);
        let minpoly = primitive_integer(&charpoly.squarefree_part());
        if minpoly.degree() == Some(1) {
            return Ok(ExactScalar::Rational(-minpoly.coeff(0) / minpoly.coeff(1)));
        }
        let mut bits = BASE_BITS;
        while bits <= MAX_BITS {
            let g = CBox::of(&gen.refine(bits)?.bx);
            let mut acc = CBox::point(&Rat::zero());
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(&g).add(&CBox::point(c));
            }
            match AlgebraicNumber::select(&minpoly, &acc.to_rbox(), bits) {
                Ok(Some(bx)) => return Ok(ExactScalar::Algebraic(AlgebraicNumber { minpoly, bx })),
                Ok(None) => return Err(Error::Precision),
                Err(Error::Ambiguous) => bits += 32,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Precision)
    }
}

/// `Q(theta)` for a root `theta` of the irreducible `q`, embedded at the
/// first root in canonical order. Linear `q` gives `Q` and its rational root.
pub fn field_of_root(q: &UPoly<Rat>) -> Result<(Option<Arc<NumberField>>, NfElem), Error> {
    if q.degree() == Some(1) {
        return Ok((None, NfElem::Rat(-q.coeff(0) / q.coeff(1))));
    }
    let root = AlgebraicNumber::roots_of(q)?
        .into_iter()
        .next()
        .ok_or(Error::Precision)?;
    let k = NumberField::new(q.clone(), Some(root));
    let theta = k.generator();
    Ok((Some(k), theta))
}

impl ExactScalar {
    /// Value of a field element under the field's embedding.
    pub fn from_nf(e: &NfElem) -> Result<ExactScalar, Error> {
        match e {
            NfElem::Rat(r) => Ok(ExactScalar::Rational(r.clone())),
            NfElem::Alg(k, _) => {
                let emb = k
                    .embedding()
                    .ok_or_else(|| Error::InvalidInput("field without embedding".into()))?;
                ExactScalar::from_field_element(&e.to_poly(), emb)
            }
        }
    }
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Canonical isolation of all roots of an irreducible polynomial.
pub fn conjugates(minpoly: &UPoly<Rat>) -> Result<Vec<ExactScalar>, Error> {
    if minpoly.degree() == Some(1) {
        let m = minpoly;
        return Ok(vec![ExactScalar::Rational(-m.coeff(0) / m.coeff(1))]);
    }
    Ok(AlgebraicNumber::roots_of(minpoly)?
        .into_iter()
        .map(ExactScalar::Algebraic)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: i64) -> ExactScalar {
        let roots = conjugates(&UPoly::from_ints(&[-n, 0, 1])).unwrap();
        roots
            .into_iter()
            .find(|r| r.sign_re().unwrap() > 0)
            .unwrap()
    }

    #[test]
    fn sqrt2_squared_is_rational() {
        let cfg = ExtensionConfig::default();
        let s = sqrt(2);
        let p = s.mul(&s, &cfg).unwrap();
        assert!(p.equals(&ExactScalar::int(2)).unwrap());
    }

    #[test]
    fn rational_addition() {
        let cfg = ExtensionConfig::default();
        let a = ExactScalar::rational(Rat::new(1.into(), 3.into()));
        let b = ExactScalar::rational(Rat::new(1.into(), 6.into()));
        assert!(a
            .add(&b, &cfg)
            .unwrap()
            .equals(&ExactScalar::rational(Rat::new(1.into(), 2.into())))
            .unwrap());
    }

    #[test]
    fn equality_distinguishes_conjugates() {
        let s = sqrt(2);
        assert!(!s.equals(&s.neg()).unwrap());
        let refined = match &s {
            ExactScalar::Algebraic(a) => ExactScalar::Algebraic(a.refine(80).unwrap()),
            _ => unreachable!(),
        };
        assert!(s.equals(&refined).unwrap());
    }

    #[test]
    fn product_bound_is_enforced() {
        let cfg = ExtensionConfig {
            bound: 4,
            product_bound: 3,
        };
        let e = sqrt(2).mul(&sqrt(3), &cfg).unwrap_err();
        assert!(matches!(e, Error::ExtensionOverflow { .. }));
    }

    #[test]
    fn sqrt2_times_sqrt3_is_sqrt6() {
        let cfg = ExtensionConfig::default();
        let p = sqrt(2).mul(&sqrt(3), &cfg).unwrap();
        assert!(p.equals(&sqrt(6)).unwrap());
        let i = conjugates(&UPoly::from_ints(&[1, 0, 1])).unwrap();
        assert_eq!(i[0].sign_re().unwrap(), 0);
        assert_ne!(i[0].sign_im().unwrap(), 0);
    }
}
