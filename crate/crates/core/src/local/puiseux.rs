//! Rational Newton–Puiseux: branches of a germ grouped into Galois orbits.
//!
//! A simple root of an edge's face polynomial determines its branch
//! completely, so it only contributes a multiplicity and an orbit size.
//! Repeated roots are resolved by the substitution
//! `x = xi^v X^b`, `y = X^a (xi^u + Y)` with `u b - v a = 1` over the field
//! extended by the root `xi`.

use std::sync::Arc;

use num_integer::Integer;

use crate::algebra::factor::{extend_field, factor_over};
use crate::algebra::field::{NfElem, NumberField};
use crate::algebra::{upoly_to_string, Coeff, ExtensionConfig, MPoly, Rat, UPoly};
use crate::curve::LocalPoly;
use crate::Error;

use super::germ::{polygon_of, shear};

const FACTOR_LIMIT: usize = 64;

/// A leading term of a Puiseux expansion: the exponent of `x` and the face
/// polynomial factor whose root fixes the coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionTerm {
    pub exponent: Rat,
    pub face_factor: String,
}

/// One Galois orbit of branches at a point.
#[derive(Clone, Debug)]
pub struct BranchDatum {
    pub multiplicity: u32,
    pub orbit_size: usize,
    /// Terms up to the order where the branch separates from the others.
    pub expansion: Vec<ExpansionTerm>,
    pub truncation_order: Rat,
}

#[derive(Clone)]
struct Level {
    field: Option<Arc<NumberField>>,
    base: Rat,
    scale: Rat,
    ramification: u32,
    weight: usize,
    expansion: Vec<ExpansionTerm>,
}

impl Level {
    fn branch(
        &self,
        ramification: u32,
        weight: usize,
        expansion: Vec<ExpansionTerm>,
    ) -> BranchDatum {
        let truncation_order = expansion
            .last()
            .map(|t| t.exponent.clone())
            .unwrap_or_else(|| self.base.clone());
        BranchDatum {
            multiplicity: ramification,
            orbit_size: weight,
            expansion,
            truncation_order,
        }
    }
}

/// Branch orbits of a germ. The germ is first sheared so that `x = 0` is not
/// tangent, making every branch's multiplicity its ramification index.
pub fn puiseux_branches(f: &LocalPoly, cfg: &ExtensionConfig) -> Result<Vec<BranchDatum>, Error> {
    let m = f.order();
    if f.poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if m == 0 {
        return Err(Error::NotOnCurve);
    }
    let cone = f.poly.homogeneous_part(m);
    let k = (0..)
        .find(|&k| !cone.eval(&[NfElem::from_i64(k), NfElem::one()]).is_zero())
        .unwrap();
    let g = shear(&f.poly, k);
    let level = Level {
        field: f.field.clone(),
        base: Rat::from_integer(0.into()),
        scale: Rat::from_integer(1.into()),
        ramification: 1,
        weight: 1,
        expansion: Vec::new(),
    };
    let mut out = Vec::new();
    resolve(&g, &level, cfg, &mut out)?;
    Ok(out)
}

fn y_order_on_axis(f: &MPoly<NfElem>) -> Option<u32> {
    f.terms().keys().filter(|e| e[0] == 0).map(|e| e[1]).min()
}

fn face_label(p: &UPoly<NfElem>) -> String {
    let p = p.monic();
    match p
        .coeffs()
        .iter()
        .map(|c| c.as_rat())
        .collect::<Option<Vec<_>>>()
    {
        Some(cs) => upoly_to_string(&UPoly::new(cs), "T"),
        None => format!("{:?}", p.coeffs()),
    }
}

fn resolve(
    f: &MPoly<NfElem>,
    lvl: &Level,
    cfg: &ExtensionConfig,
    out: &mut Vec<BranchDatum>,
) -> Result<(), Error> {
    let e = y_order_on_axis(f).ok_or(Error::NonIsolated)?;
    if e == 0 {
        return Ok(());
    }
    if e == 1 {
        let mut expansion = lvl.expansion.clone();
        if let Some(seg) = polygon_of(f).segments.first() {
            expansion.push(ExpansionTerm {
                exponent: &lvl.base + &seg.inclination * &lvl.scale,
                face_factor: face_label(&seg.face_poly()),
            });
        }
        out.push(lvl.branch(lvl.ramification, lvl.weight, expansion));
        return Ok(());
    }
    let hull = polygon_of(f);
    let jmin = hull.vertices.last().unwrap().1;
    match jmin {
        0 => {}
        1 => out.push(lvl.branch(lvl.ramification, lvl.weight, lvl.expansion.clone())),
        _ => return Err(Error::NonIsolated),
    }
    for seg in &hull.segments {
        let (a, b) = seg.slope();
        let exponent = &lvl.base + &seg.inclination * &lvl.scale;
        let phi = seg.face_poly();
        let parts = phi.try_squarefree_decomposition().ok_or(Error::Precision)?;
        for (idx, part) in parts.iter().enumerate() {
            if part.degree().unwrap_or(0) == 0 {
                continue;
            }
            let mult = idx + 1;
            let split = factor_over(part, lvl.field.as_ref(), FACTOR_LIMIT);
            let mut pieces: Vec<(UPoly<NfElem>, bool)> =
                split.factors.iter().map(|p| (p.clone(), true)).collect();
            if split.leftover.degree().unwrap_or(0) > 0 {
                pieces.push((split.leftover.clone(), split.leftover_irreducible));
            }
            for (psi, irreducible) in pieces {
                let deg = psi.degree().unwrap();
                let mut expansion = lvl.expansion.clone();
                expansion.push(ExpansionTerm {
                    exponent: exponent.clone(),
                    face_factor: face_label(&psi),
                });
                if mult == 1 {
                    out.push(lvl.branch(lvl.ramification * b, lvl.weight * deg, expansion));
                    continue;
                }
                let base_degree = lvl.field.as_ref().map_or(1, |k| k.degree());
                if !irreducible || base_degree * deg > cfg.product_bound {
                    return Err(Error::ExtensionOverflow {
                        certificate: face_label(&psi),
                    });
                }
                let ext = extend_field(lvl.field.as_ref(), &psi);
                let fl = f.map_coeffs(|c| ext.map.apply(c));
                let next = substitute_edge(&fl, &ext.root, a, b);
                let child = Level {
                    field: ext.field.clone(),
                    base: exponent.clone(),
                    scale: &lvl.scale / Rat::from_integer(b.into()),
                    ramification: lvl.ramification * b,
                    weight: lvl.weight * deg,
                    expansion,
                };
                resolve(&next, &child, cfg, out)?;
            }
        }
    }
    Ok(())
}

/// `f(xi^v X^b, X^a (xi^u + Y)) / X^N` for the edge of inclination `a / b`.
fn substitute_edge(f: &MPoly<NfElem>, xi: &NfElem, a: u32, b: u32) -> MPoly<NfElem> {
    let (a, b) = (a as i64, b as i64);
    // u b - v a = 1
    let eg = b.extended_gcd(&a);
    let (u, v) = (eg.x, -eg.y);
    let xi_inv = xi.inv().expect("face roots are nonzero");
    let power = |k: i64| {
        if k >= 0 {
            xi.pow(k as u32)
        } else {
            xi_inv.pow((-k) as u32)
        }
    };
    let n = f
        .terms()
        .keys()
        .map(|e| b * e[0] as i64 + a * e[1] as i64)
        .min()
        .unwrap();
    let shifted = MPoly::var(2, 1).add(&MPoly::constant(2, power(u)));
    let mut out = MPoly::zero(2);
    for (e, c) in f.terms() {
        let (i, j) = (e[0] as i64, e[1] as i64);
        let coeff = c.mul(&power(v * i));
        let xexp = (b * i + a * j - n) as u32;
        let term = shifted.pow(j as u32).mul_monomial(&[xexp, 0], &coeff);
        out = out.add(&term);
    }
    out
}
