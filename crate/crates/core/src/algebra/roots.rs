//! Root location for rational univariate polynomials.
//!
//! Exact parts: Sturm-sequence real root isolation (used to find rational
//! roots) and certified complex isolating boxes. The Aberth iteration in `f64`
//! only proposes approximations; every claim made from it is re-verified in
//! exact arithmetic before use.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use super::coeff::{rat, Coeff, Rat};
use super::upoly::UPoly;

/// Scale to a primitive integer polynomial with positive leading coefficient.
pub fn primitive_integer(p: &UPoly<Rat>) -> UPoly<Rat> {
    if p.is_zero() {
        return p.clone();
    }
    let mut l = BigInt::from(1);
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::from(0);
    for c in &ints {
        g = g.gcd(c);
    }
    if ints.last().unwrap().is_negative() {
        g = -g;
    }
    UPoly::new(
        ints.into_iter()
            .map(|c| Rat::from_integer(c / &g))
            .collect(),
    )
}

fn sign_variations(seq: &[UPoly<Rat>], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

fn sturm_sequence(p: &UPoly<Rat>) -> Vec<UPoly<Rat>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        // positive rescaling keeps sign patterns intact
        let r = r.neg();
        let prim = primitive_integer(&r);
        let scale = if r.lc().is_positive() {
            prim
        } else {
            prim.neg()
        };
        seq.push(scale);
    }
    seq
}

pub fn cauchy_bound(p: &UPoly<Rat>) -> Rat {
    let lc = p.lc().abs();
    let mut m = Rat::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let v = c.abs() / &lc;
        if v > m {
            m = v;
        }
    }
    m + rat(1)
}

/// Disjoint intervals `(a, b]`, each containing exactly one real root of the
/// square-free polynomial `p`.
pub fn isolate_real_roots(p: &UPoly<Rat>) -> Vec<(Rat, Rat)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(p);
    let b = cauchy_bound(p);
    let mut stack = vec![(-b.clone(), b)];
    let mut out = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_variations(&seq, &lo) - sign_variations(&seq, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / rat(2);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The rational with the smallest denominator in the closed interval.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl.clone() + rat(1) <= *hi {
        return fl + rat(1);
    }
    // lo, hi share the integer part: recurse on reciprocals of fractional parts
    let a = &fl;
    let inner = simplest_rational_between(&(hi - a).recip(), &(lo - a).recip());
    a + inner.recip()
}

/// Exact rational roots of a nonzero polynomial (without multiplicity).
pub fn rational_roots(p: &UPoly<Rat>) -> Vec<Rat> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut q = primitive_integer(&p.squarefree_part());
    if q.coeff(0).is_zero() {
        out.push(Rat::zero());
        q = q.div_exact(&UPoly::x()).unwrap();
    }
    if q.degree().unwrap_or(0) == 0 {
        return out;
    }
    let lc = q.lc().abs();
    let width_target = (lc.clone() * lc.clone() * rat(2)).recip();
    for (mut lo, mut hi) in isolate_real_roots(&q) {
        if q.eval(&hi).is_zero() {
            out.push(hi);
            continue;
        }
        let mut exact = None;
        // lo may be the root of the neighbouring interval; hi is not a root
        let s_hi = q.eval(&hi).signum();
        while &hi - &lo >= width_target {
            let mid = (&lo + &hi) / rat(2);
            let v = q.eval(&mid);
            if v.is_zero() {
                exact = Some(mid);
                break;
            }
            if v.signum() == s_hi {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if let Some(r) = exact {
            out.push(r);
            continue;
        }
        let cand = simplest_rational_between(&lo, &hi);
        if cand > lo && cand.denom() <= lc.numer() && q.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out.sort();
    out
}

/// Approximate complex roots by the Aberth–Ehrlich iteration.
/// Returns `None` when the coefficients do not fit comfortably in `f64` or the
/// iteration fails to settle.
pub fn approx_roots(p: &UPoly<Rat>) -> Option<Vec<Complex64>> {
    let n = p.degree()?;
    if n == 0 {
        return Some(Vec::new());
    }
    let lc = p.lc();
    let cs: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| (c / &lc).to_f64().map(|v| Complex64::new(v, 0.0)))
        .collect::<Option<_>>()?;
    if cs.iter().any(|c| !c.re.is_finite()) {
        return None;
    }
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    let radius = cs[..n]
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max)
        .clamp(1e-3, 1e6);
    let radius = radius.powf(1.0 / n as f64).max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-15 {
            return Some(z);
        }
    }
    Some(z)
}

/// Gaussian rational.
#[derive(Clone, Debug, PartialEq)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        CRat { re, im }
    }
    pub fn zero() -> Self {
        CRat::new(Rat::zero(), Rat::zero())
    }
    pub fn from_rat(r: Rat) -> Self {
        CRat::new(r, Rat::zero())
    }
    pub fn add(&self, o: &Self) -> Self {
        CRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &Self) -> Self {
        CRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn mul(&self, o: &Self) -> Self {
        CRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm_sqr();
        let conj = CRat::new(o.re.clone(), -&o.im);
        let p = self.mul(&conj);
        CRat::new(p.re / &n, p.im / n)
    }
    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    pub fn from_c64(z: Complex64) -> Self {
        CRat::new(
            BigRational::from_f64(z.re).unwrap_or_else(Rat::zero),
            BigRational::from_f64(z.im).unwrap_or_else(Rat::zero),
        )
    }
    /// Round both parts to multiples of `2^-bits`.
    pub fn round(&self, bits: u32) -> Self {
        let scale = Rat::from_integer(BigInt::from(1) << bits);
        let r = |x: &Rat| (x * &scale).round() / &scale;
        CRat::new(r(&self.re), r(&self.im))
    }
}

pub fn eval_complex(p: &UPoly<Rat>, z: &CRat) -> CRat {
    let mut acc = CRat::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z).add(&CRat::from_rat(c.clone()));
    }
    acc
}

/// Axis-aligned box with rational corners.
#[derive(Clone, Debug, PartialEq)]
pub struct RBox {
    pub re_lo: Rat,
    pub re_hi: Rat,
    pub im_lo: Rat,
    pub im_hi: Rat,
}

impl RBox {
    pub fn around(c: &CRat, r: &Rat) -> Self {
        RBox {
            re_lo: &c.re - r,
            re_hi: &c.re + r,
            im_lo: &c.im - r,
            im_hi: &c.im + r,
        }
    }
    pub fn intersects(&self, o: &RBox) -> bool {
        self.re_lo <= o.re_hi
            && o.re_lo <= self.re_hi
            && self.im_lo <= o.im_hi
            && o.im_lo <= self.im_hi
    }
    pub fn contains(&self, z: &CRat) -> bool {
        self.re_lo <= z.re && z.re <= self.re_hi && self.im_lo <= z.im && z.im <= self.im_hi
    }
    pub fn center(&self) -> CRat {
        CRat::new(
            (&self.re_lo + &self.re_hi) / rat(2),
            (&self.im_lo + &self.im_hi) / rat(2),
        )
    }
    pub fn width(&self) -> Rat {
        let a = &self.re_hi - &self.re_lo;
        let b = &self.im_hi - &self.im_lo;
        if a > b {
            a
        } else {
            b
        }
    }
    /// Mirror image under complex conjugation.
    pub fn conj(&self) -> RBox {
        RBox {
            re_lo: self.re_lo.clone(),
            re_hi: self.re_hi.clone(),
            im_lo: -&self.im_hi,
            im_hi: -&self.im_lo,
        }
    }
    /// Image under `z -> -conj(z)`.
    pub fn reflect_imag_axis(&self) -> RBox {
        RBox {
            re_lo: -&self.re_hi,
            re_hi: -&self.re_lo,
            im_lo: self.im_lo.clone(),
            im_hi: self.im_hi.clone(),
        }
    }
}

fn sqrt_upper(v: &Rat) -> Rat {
    if v.is_zero() {
        return Rat::zero();
    }
    let f = v.to_f64().unwrap_or(f64::MAX).sqrt();
    let mut ub = BigRational::from_f64(f * (1.0 + 1e-9) + f64::MIN_POSITIVE)
        .unwrap_or_else(|| v.clone() + rat(1));
    while &ub * &ub < *v {
        ub *= rat(2);
    }
    ub
}

/// Certified isolating boxes for all complex roots of a square-free
/// polynomial, each of width at most about `2^-bits`.
///
/// Certification uses the inclusion disks `|z - z_i| <= n |W_i|` built from
/// the Weierstrass corrections `W_i`: when the enclosing squares are pairwise
/// disjoint each one holds exactly one root.
pub fn isolate_complex_roots(p: &UPoly<Rat>, bits: u32) -> Option<Vec<RBox>> {
    let n = p.degree()?;
    if n == 0 {
        return Some(Vec::new());
    }
    let p = primitive_integer(p);
    let lc = CRat::from_rat(p.lc());
    let mut z: Vec<CRat> = approx_roots(&p)?
        .into_iter()
        .map(|c| CRat::from_c64(c).round(60))
        .collect();
    let nn = rat(n as i64);
    let target = Rat::new(BigInt::from(1), BigInt::from(1) << bits);
    let mut prec = 60u32;
    for _round in 0..12 {
        let mut w = Vec::with_capacity(n);
        let mut degenerate = false;
        for i in 0..n {
            let mut den = lc.clone();
            for j in 0..n {
                if j != i {
                    den = den.mul(&z[i].sub(&z[j]));
                }
            }
            if den.norm_sqr().is_zero() {
                degenerate = true;
                break;
            }
            w.push(eval_complex(&p, &z[i]).div(&den));
        }
        if degenerate {
            return None;
        }
        let radii: Vec<Rat> = w
            .iter()
            .map(|wi| &nn * sqrt_upper(&wi.norm_sqr()))
            .collect();
        let boxes: Vec<RBox> = z
            .iter()
            .zip(&radii)
            .map(|(c, r)| RBox::around(c, r))
            .collect();
        let disjoint = (0..n).all(|i| (i + 1..n).all(|j| !boxes[i].intersects(&boxes[j])));
        let small = boxes.iter().all(|b| b.width() <= target);
        if disjoint && small {
            return Some(boxes);
        }
        // Weierstrass step in exact arithmetic, rounded to keep sizes bounded
        prec = (prec * 2).min(bits + 64).max(prec);
        for _ in 0..3 {
            let snapshot = z.clone();
            for i in 0..n {
                let mut den = lc.clone();
                for j in 0..n {
                    if j != i {
                        den = den.mul(&snapshot[i].sub(&snapshot[j]));
                    }
                }
                if den.norm_sqr().is_zero() {
                    return None;
                }
                let wi = eval_complex(&p, &snapshot[i]).div(&den);
                z[i] = snapshot[i].sub(&wi).round(prec);
            }
        }
    }
    None
}

pub(crate) fn c64_of(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_small_polys() {
        let p = UPoly::from_ints(&[0, -1, 0, 1]); // x^3 - x
        assert_eq!(rational_roots(&p), vec![rat(-1), rat(0), rat(1)]);
        let q = UPoly::from_ints(&[-2, 0, 1]);
        assert!(rational_roots(&q).is_empty());
        // (3x - 2)(5x + 7)(x^2 + 1)
        let r = UPoly::from_ints(&[-2, 3])
            .mul(&UPoly::from_ints(&[7, 5]))
            .mul(&UPoly::from_ints(&[1, 0, 1]));
        assert_eq!(
            rational_roots(&r),
            vec![
                Rat::new((-7).into(), 5.into()),
                Rat::new(2.into(), 3.into())
            ]
        );
    }

    #[test]
    fn rational_roots_on_bisection_points() {
        let grid: Vec<Rat> = [
            (-2, 1),
            (-3, 2),
            (-1, 2),
            (0, 1),
            (1, 4),
            (1, 2),
            (3, 4),
            (1, 1),
            (3, 2),
            (3, 1),
        ]
        .iter()
        .map(|&(a, b)| Rat::new(a.into(), b.into()))
        .collect();
        for (i, a) in grid.iter().enumerate() {
            for b in &grid[i + 1..] {
                for c in [rat(5), Rat::new(7.into(), 3.into())] {
                    let lin = |r: &Rat| UPoly::new(vec![-r.clone(), rat(1)]);
                    let p = lin(a).mul(&lin(b)).mul(&lin(&c));
                    let mut want = vec![a.clone(), b.clone(), c];
                    want.sort();
                    assert_eq!(rational_roots(&p), want);
                }
            }
        }
    }

    #[test]
    fn simplest_rational() {
        let s = simplest_rational_between(
            &Rat::new(31.into(), 100.into()),
            &Rat::new(34.into(), 100.into()),
        );
        assert_eq!(s, Rat::new(1.into(), 3.into()));
        assert_eq!(simplest_rational_between(&rat(-3), &rat(-2)), rat(-2));
    }

    #[test]
    fn complex_isolation_separates_conjugates() {
        let p = UPoly::from_ints(&[1, 1, 1]); // x^2 + x + 1
        let boxes = isolate_complex_roots(&p, 20).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(!boxes[0].intersects(&boxes[1]));
        for b in &boxes {
            assert!(b.contains(&CRat::new(
                Rat::new((-1).into(), 2.into()),
                b.center().im.clone()
            )));
        }
    }
}
