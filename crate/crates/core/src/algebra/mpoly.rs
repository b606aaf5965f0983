//! Sparse multivariate polynomials over a [`Coeff`] field.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order is
//! lexicographic with variable 0 most significant. That order drives exact
//! division and makes every printed form deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::coeff::{Coeff, Rat};
use super::upoly::UPoly;

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct MPoly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exp: Exponent, c: C) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn coeff(&self, exp: &[u32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn add_term(&mut self, exp: Exponent, c: C) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.neg());
        }
        p
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut p = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1.mul(c2));
            }
        }
        p
    }

    pub fn mul_monomial(&self, exp: &[u32], c: &C) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let e: Exponent = e1.iter().zip(exp).map(|(a, b)| a + b).collect();
            p.add_term(e, c1.mul(c));
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a term (the multiplicity at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn order_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|k| k == d),
        }
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] > 0 {
                let mut e2 = e.clone();
                e2[v] -= 1;
                p.add_term(e2, c.mul(&C::from_i64(e[v] as i64)));
            }
        }
        p
    }

    /// Replace variable `v` by the constant `a` (the variable stays in the
    /// signature with exponent zero everywhere).
    pub fn eval_var(&self, v: usize, a: &C) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            p.add_term(e2, c.mul(&a.pow(e[v])));
        }
        p
    }

    /// Evaluate at a full point.
    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&x.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Simultaneous substitution `x_i -> images[i]`; the images may live in a
    /// ring with a different number of variables.
    pub fn substitute(&self, images: &[MPoly<C>]) -> MPoly<C> {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MPoly<C>>> = images
            .iter()
            .map(|p| vec![MPoly::one(n), p.clone()])
            .collect();
        let mut out = MPoly::zero(n);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][k as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Coefficients with respect to variable `v`: entry `k` is the coefficient
    /// of `v^k` (with `v` removed).
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly<C>> {
        let d = match self.degree_in(v) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![MPoly::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            out[e[v] as usize].add_term(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(nvars: usize, v: usize, cs: &[MPoly<C>]) -> Self {
        let mut p = Self::zero(nvars);
        for (k, c) in cs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut e2 = e.clone();
                e2[v] += k as u32;
                p.add_term(e2, a.clone());
            }
        }
        p
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (de, dc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let dinv = dc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((re, rc)) = r.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponent = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let c = rc.mul(&dinv);
            for (ed, cd) in &d.terms {
                let t: Exponent = ed.iter().zip(&e).map(|(a, b)| a + b).collect();
                r.add_term(t, cd.mul(&c).neg());
            }
            q.add_term(e, c);
        }
        Some(q)
    }

    /// Scale so that the lexicographically leading coefficient is one.
    pub fn normalize(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("non-invertible leading coefficient")),
        }
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|e| e[v] > 0))
            .collect()
    }

    pub fn to_upoly(&self, v: usize) -> UPoly<C> {
        UPoly::new(
            self.coeffs_in(v)
                .iter()
                .map(|c| c.constant_term())
                .collect(),
        )
    }

    pub fn from_upoly(nvars: usize, v: usize, p: &UPoly<C>) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[v] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Homogenize to total degree `d` using the new last variable.
    pub fn homogenize(&self, d: u32) -> Self {
        let mut p = Self::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            let s: u32 = e.iter().sum();
            assert!(s <= d, "degree exceeds homogenization degree");
            let mut e2 = e.clone();
            e2.push(d - s);
            p.add_term(e2, c.clone());
        }
        p
    }

    /// Reorder variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; self.nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[perm[i]] = k;
            }
            p.add_term(e2, c.clone());
        }
        p
    }

    /// Drop variable `v`, which must not occur.
    pub fn remove_var(&self, v: usize) -> Self {
        let mut p = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            assert_eq!(e[v], 0, "removing a variable that occurs");
            let mut e2 = e.clone();
            e2.remove(v);
            p.add_term(e2, c.clone());
        }
        p
    }

    /// Greatest common divisor, normalized by [`MPoly::normalize`].
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalize();
        }
        if o.is_zero() {
            return self.normalize();
        }
        let mut vars = self.used_vars();
        for v in o.used_vars() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let Some(&v) = vars.iter().max() else {
            return Self::one(self.nvars);
        };
        let ca = self.content_in(v);
        let cb = o.content_in(v);
        let c = ca.gcd(&cb);
        let mut a = self.div_exact(&ca).unwrap().normalize();
        let mut b = o.div_exact(&cb).unwrap().normalize();
        if a.degree_in(v) < b.degree_in(v) {
            std::mem::swap(&mut a, &mut b);
        }
        let g = loop {
            if b.degree_in(v) == Some(0) {
                break Self::one(self.nvars);
            }
            let r = prem(&a, &b, v);
            if r.is_zero() {
                break b;
            }
            a = b;
            b = r.primitive_part_in(v).normalize();
        };
        c.mul(&g.primitive_part_in(v)).normalize()
    }

    /// Gcd of the coefficients with respect to `v`.
    pub fn content_in(&self, v: usize) -> Self {
        let mut g = Self::zero(self.nvars);
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c);
            if g.is_constant() {
                return Self::one(self.nvars);
            }
        }
        g
    }

    pub fn primitive_part_in(&self, v: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_exact(&self.content_in(v)).unwrap()
    }

    /// `self / gcd(self, all partial derivatives)`, normalized.
    pub fn squarefree_part(&self) -> Self {
        let mut g = self.clone();
        for v in self.used_vars() {
            g = g.gcd(&self.derivative(v));
        }
        self.div_exact(&g).unwrap().normalize()
    }

    /// Resultant with respect to `v` by the subresultant PRS.
    ///
    /// Both inputs need positive degree in `v`; the result does not involve
    /// `v` and keeps the same variable signature.
    pub fn resultant(&self, o: &Self, v: usize) -> Self {
        subresultant(self, o, v)
    }
}

/// Pseudo-remainder of `a` by `b` with respect to `v`.
pub fn prem<C: Coeff>(a: &MPoly<C>, b: &MPoly<C>, v: usize) -> MPoly<C> {
    let n = a.nvars;
    let bc = b.coeffs_in(v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.coeffs_in(v);
    if r.len() <= db {
        return a.clone();
    }
    let mut e = r.len() - db;
    while r.len() > db && !r.is_empty() {
        let lr = r.pop().unwrap();
        let shift = r.len() - db;
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (j, bj) in bc.iter().enumerate().take(db) {
            r[shift + j] = r[shift + j].sub(&lr.mul(bj));
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        e -= 1;
    }
    let mut out = MPoly::from_coeffs_in(n, v, &r);
    if e > 0 {
        out = out.mul(&lb.pow(e as u32));
    }
    out
}

impl MPoly<Rat> {
    /// Scale to integer coefficients with content one and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Self {
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let mut l = BigInt::from(1);
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::from(0);
        for c in self.terms.values() {
            g = g.gcd(&(c * Rat::from_integer(l.clone())).to_integer());
        }
        if lc.is_negative() {
            g = -g;
        }
        self.scale(&Rat::new(l, g))
    }
}

fn subresultant<C: Coeff>(p: &MPoly<C>, q: &MPoly<C>, v: usize) -> MPoly<C> {
    let n = p.nvars;
    if p.is_zero() || q.is_zero() {
        return MPoly::zero(n);
    }
    let (dp, dq) = (p.degree_in(v).unwrap(), q.degree_in(v).unwrap());
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut s = C::one();
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            s = s.neg();
        }
    }
    if b.degree_in(v) == Some(0) {
        return b.pow(a.degree_in(v).unwrap()).scale(&s);
    }
    let one = MPoly::one(n);
    let (mut g, mut h) = (one.clone(), one.clone());
    loop {
        let da = a.degree_in(v).unwrap();
        let db = b.degree_in(v).unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg();
        }
        let r = prem(&a, &b, v);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r
            .div_exact(&divisor)
            .expect("subresultant division is exact");
        g = a.coeffs_in(v).pop().unwrap();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact")
        };
        if b.is_zero() {
            return MPoly::zero(n);
        }
        if b.degree_in(v) == Some(0) {
            break;
        }
    }
    let da = a.degree_in(v).unwrap();
    let lb = b.clone();
    let res = if da == 0 {
        h
    } else {
        lb.pow(da).div_exact(&h.pow(da - 1)).expect("exact")
    };
    res.scale(&s)
}
