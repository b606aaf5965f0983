//! Bounded factor discovery over Q and over simple extensions.
//!
//! Over Q: rational roots are found exactly; factors of degree 2..=limit are
//! proposed by grouping numeric roots and accepted only after exact division.
//! Anything not split off is returned as a leftover, never dropped. Over an
//! extension `Q(a)` the norm method reduces to the rational case.

use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::FromPrimitive;

use super::coeff::{rat, Coeff, Rat};
use super::field::{FieldMap, NfElem, NumberField};
use super::mpoly::MPoly;
use super::roots::{approx_roots, primitive_integer, rational_roots};
use super::upoly::UPoly;

/// Result of splitting a square-free polynomial.
#[derive(Clone, Debug)]
pub struct Split<C: Coeff> {
    /// Irreducible factors found, monic (over Q: primitive integer).
    pub factors: Vec<UPoly<C>>,
    /// Product of everything not split off; constant when the split is complete.
    pub leftover: UPoly<C>,
    /// Whether the leftover is known to be irreducible (or constant).
    pub leftover_irreducible: bool,
}

const MAX_COMBINATIONS: usize = 250_000;

fn binomial(n: usize, k: usize) -> usize {
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn candidate_from_roots(roots: &[Complex64], lc: f64) -> Option<UPoly<Rat>> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    let mut ints = Vec::with_capacity(c.len());
    for a in c {
        let v = a * lc;
        let tol = 1e-6 * (1.0 + v.re.abs());
        if v.im.abs() > tol || (v.re - v.re.round()).abs() > tol {
            return None;
        }
        ints.push(BigRational::from_f64(v.re.round())?);
    }
    Some(primitive_integer(&UPoly::new(ints)))
}

/// Split a square-free rational polynomial into irreducible factors of degree
/// at most `limit`, plus a leftover.
pub fn split_squarefree(p: &UPoly<Rat>, limit: usize) -> Split<Rat> {
    let mut factors = Vec::new();
    let mut q = primitive_integer(p);
    for r in rational_roots(&q) {
        let lin = primitive_integer(&UPoly::new(vec![-r, rat(1)]));
        q = q.div_exact(&lin).expect("rational root divides");
        factors.push(lin);
    }
    let mut certified = true;
    let mut deg = q.degree().unwrap_or(0);
    if deg >= 2 {
        let mut roots = match approx_roots(&q) {
            Some(r) => r,
            None => {
                certified = false;
                Vec::new()
            }
        };
        let mut j = 2;
        while !roots.is_empty() && j <= deg / 2 {
            if binomial(roots.len(), j) > MAX_COMBINATIONS {
                certified = false;
                break;
            }
            let lc = crate::algebra::roots::c64_of(&q.lc());
            let mut found: Option<(Vec<usize>, UPoly<Rat>)> = None;
            combinations(roots.len(), j, |idx| {
                let sub: Vec<Complex64> = idx.iter().map(|&i| roots[i]).collect();
                if let Some(cand) = candidate_from_roots(&sub, lc) {
                    if cand.degree() == Some(j) && q.div_exact(&cand).is_some() {
                        found = Some((idx.to_vec(), cand));
                        return true;
                    }
                }
                false
            });
            match found {
                Some((idx, cand)) => {
                    q = q.div_exact(&cand).unwrap();
                    deg = q.degree().unwrap_or(0);
                    for &i in idx.iter().rev() {
                        roots.remove(i);
                    }
                    factors.push(cand);
                }
                None => j += 1,
            }
        }
        if !roots.is_empty() && j <= deg / 2 {
            certified = false;
        }
    }
    let deg = q.degree().unwrap_or(0);
    if deg >= 1 && certified {
        factors.push(q.clone());
        q = UPoly::one();
    }
    // factors beyond the limit go back into the leftover
    let mut small = Vec::new();
    let mut large = 0usize;
    for f in factors {
        if f.degree().unwrap_or(0) <= limit {
            small.push(f);
        } else {
            q = q.mul(&f);
            large += 1;
        }
    }
    small.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| format!("{a:?}").cmp(&format!("{b:?}")))
    });
    let leftover_irreducible = q.degree().unwrap_or(0) == 0 || (certified && large <= 1);
    Split {
        factors: small,
        leftover: primitive_integer(&q),
        leftover_irreducible,
    }
}

/// Full bounded factorization with multiplicities.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub factors: Vec<(UPoly<Rat>, usize)>,
    pub leftover: Vec<(UPoly<Rat>, usize)>,
}

pub fn factor_bounded(p: &UPoly<Rat>, limit: usize) -> Factorization {
    let mut factors = Vec::new();
    let mut leftover = Vec::new();
    for (i, a) in p.squarefree_decomposition().into_iter().enumerate() {
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let s = split_squarefree(&a, limit);
        factors.extend(s.factors.into_iter().map(|f| (f, i + 1)));
        if s.leftover.degree().unwrap_or(0) > 0 {
            leftover.push((s.leftover, i + 1));
        }
    }
    Factorization { factors, leftover }
}

fn lift_to_bivariate(h: &UPoly<NfElem>, s: i64) -> MPoly<Rat> {
    // variables: 0 = z, 1 = t; h(T) with coefficients g_k(t), T -> z - s t
    let shift = MPoly::var(2, 0).sub(&MPoly::var(2, 1).scale(&rat(s)));
    let mut acc = MPoly::zero(2);
    let mut power = MPoly::one(2);
    for c in h.coeffs() {
        let ck = MPoly::from_upoly(2, 1, &c.to_poly());
        acc = acc.add(&ck.mul(&power));
        power = power.mul(&shift);
    }
    acc
}

/// Norm `Res_t(m(t), h(z - s t, t))` as a univariate polynomial in `z`.
fn shifted_norm(h: &UPoly<NfElem>, k: &NumberField, s: i64) -> UPoly<Rat> {
    let m = MPoly::from_upoly(2, 1, k.minpoly());
    let hh = lift_to_bivariate(h, s);
    m.resultant(&hh, 1).to_upoly(0)
}

fn is_squarefree(p: &UPoly<Rat>) -> bool {
    p.gcd(&p.derivative()).degree() == Some(0)
}

/// Factor a square-free polynomial over `K` (or Q when `field` is `None`)
/// into irreducible monic factors whose root fields have absolute degree at
/// most `limit`.
pub fn factor_over(
    h: &UPoly<NfElem>,
    field: Option<&Arc<NumberField>>,
    limit: usize,
) -> Split<NfElem> {
    let Some(k) = field else {
        let hq = h.map(|c| c.as_rat().expect("rational polynomial"));
        let s = split_squarefree(&hq, limit);
        let lift = |p: &UPoly<Rat>| p.map(|c| NfElem::Rat(c.clone())).monic();
        return Split {
            factors: s.factors.iter().map(lift).collect(),
            leftover: lift(&s.leftover),
            leftover_irreducible: s.leftover_irreducible,
        };
    };
    let h = h.monic();
    if h.degree() == Some(1) {
        return Split {
            factors: vec![h],
            leftover: UPoly::one(),
            leftover_irreducible: true,
        };
    }
    let alpha = k.generator();
    for s in 0..64i64 {
        let n = shifted_norm(&h, k, s);
        if !is_squarefree(&n) {
            continue;
        }
        let split = split_squarefree(&n, limit);
        let shift = UPoly::new(vec![alpha.mul(&NfElem::from_i64(s)), NfElem::one()]);
        let mut rest = h.clone();
        let mut factors = Vec::new();
        for ni in &split.factors {
            let lifted = ni.map(|c| NfElem::Rat(c.clone())).compose(&shift);
            let g = rest.gcd(&lifted);
            if g.degree().unwrap_or(0) > 0 {
                rest = rest.div_exact(&g).unwrap();
                factors.push(g);
            }
        }
        let leftover_irreducible = split.leftover_irreducible;
        return Split {
            factors,
            leftover: rest.monic(),
            leftover_irreducible,
        };
    }
    Split {
        factors: Vec::new(),
        leftover: h,
        leftover_irreducible: false,
    }
}

/// `L = K(xi)` for a root `xi` of the irreducible monic `g` over `K`,
/// flattened to a single primitive element.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: Option<Arc<NumberField>>,
    pub map: FieldMap,
    pub root: NfElem,
}

pub fn extend_field(k: Option<&Arc<NumberField>>, g: &UPoly<NfElem>) -> Extension {
    let g = g.monic();
    if g.degree() == Some(1) {
        return Extension {
            field: k.cloned(),
            map: FieldMap::Identity,
            root: g.coeff(0).neg(),
        };
    }
    let Some(k) = k else {
        let gq = g.map(|c| c.as_rat().expect("rational polynomial"));
        let l = NumberField::new(gq, None);
        let root = l.generator();
        return Extension {
            field: Some(l),
            map: FieldMap::Identity,
            root,
        };
    };
    for s in 0..64i64 {
        let n = shifted_norm(&g, k, s);
        if !is_squarefree(&n) {
            continue;
        }
        let l = NumberField::new(n, None);
        let gamma = l.generator();
        // gcd over L[t] of m(t) and g(gamma - s t, t) is t - image(alpha)
        let m_l: UPoly<NfElem> = k.minpoly().map(|c| NfElem::Rat(c.clone()));
        let lin = UPoly::new(vec![gamma.clone(), NfElem::from_i64(-s)]);
        let mut acc: UPoly<NfElem> = UPoly::zero();
        let mut power: UPoly<NfElem> = UPoly::one();
        for c in g.coeffs() {
            let ck: UPoly<NfElem> = c.to_poly().map(|r| NfElem::Rat(r.clone()));
            acc = acc.add(&ck.mul(&power));
            power = power.mul(&lin);
        }
        let d = m_l.gcd(&acc);
        if d.degree() != Some(1) {
            continue;
        }
        let a = d.coeff(0).neg();
        let xi = gamma.sub(&a.mul(&NfElem::from_i64(s)));
        return Extension {
            field: Some(l),
            map: FieldMap::Generator(a),
            root: xi,
        };
    }
    panic!("no primitive element found for a square-free norm");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_left_over_with_quadratic_split() {
        // (x^2 + x + 1)(x^5 - x - 1)
        let p = UPoly::from_ints(&[1, 1, 1]).mul(&UPoly::from_ints(&[-1, -1, 0, 0, 0, 1]));
        let s = split_squarefree(&p, 2);
        assert_eq!(s.factors, vec![UPoly::from_ints(&[1, 1, 1])]);
        assert_eq!(s.leftover, UPoly::from_ints(&[-1, -1, 0, 0, 0, 1]));
    }

    #[test]
    fn quartic_splits_into_quadratics() {
        // (x^2 - 2)(x^2 - 3)
        let p = UPoly::from_ints(&[6, 0, -5, 0, 1]);
        let s = split_squarefree(&p, 4);
        assert_eq!(s.factors.len(), 2);
        assert!(s.leftover.degree() == Some(0));
        // x^4 + 1 is irreducible
        let s = split_squarefree(&UPoly::from_ints(&[1, 0, 0, 0, 1]), 4);
        assert_eq!(s.factors, vec![UPoly::from_ints(&[1, 0, 0, 0, 1])]);
    }

    #[test]
    fn factors_over_quadratic_field() {
        let k = NumberField::new(UPoly::from_ints(&[-2, 0, 1]), None);
        // T^2 - 2 splits over Q(sqrt 2); T^2 - 3 does not
        let h = UPoly::new(vec![NfElem::from_i64(-2), NfElem::zero(), NfElem::one()]);
        let s = factor_over(&h, Some(&k), 4);
        assert_eq!(s.factors.len(), 2);
        let h3 = UPoly::new(vec![NfElem::from_i64(-3), NfElem::zero(), NfElem::one()]);
        let s3 = factor_over(&h3, Some(&k), 4);
        assert_eq!(s3.factors.len(), 1);
        assert_eq!(s3.factors[0].degree(), Some(2));
    }

    #[test]
    fn tower_flattens_to_primitive_element() {
        let k = NumberField::new(UPoly::from_ints(&[-2, 0, 1]), None);
        let g = UPoly::new(vec![NfElem::from_i64(-3), NfElem::zero(), NfElem::one()]);
        let ext = extend_field(Some(&k), &g);
        let l = ext.field.unwrap();
        assert_eq!(l.degree(), 4);
        let a = ext.map.apply(&k.generator());
        assert_eq!(a.mul(&a), NfElem::from_i64(2));
        assert_eq!(ext.root.mul(&ext.root), NfElem::from_i64(3));
    }
}
