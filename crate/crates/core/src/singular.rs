//! Singular points of projective plane curves, one record per Galois orbit.
//!
//! Affine points are found in the chart `z = 1` after a shear `X = x + k y`
//! chosen so the sheared curve is monic in `y`. Candidate `X`-coordinates are
//! roots of a gcd of discriminant-like resultants; over each irreducible
//! factor `q` the point is recovered as the unique common root in `y` of the
//! curve and its partials over `Q[X]/(q)`. Points at infinity are read from
//! univariate gcds on the line `z = 0`.

use std::sync::Arc;

use crate::algebra::factor::split_squarefree;
use crate::algebra::field::{eval_rat, NfElem, NumberField};
use crate::algebra::parse::format_poly;
use crate::algebra::roots::primitive_integer;
use crate::algebra::scalar::field_of_root;
use crate::algebra::{
    rat, upoly_to_string, Coeff, ExactScalar, ExtensionConfig, MPoly, Rat, UPoly,
};
use crate::curve::{other_indices, HomogPoly, ProjPoint};
use crate::Error;

const MAX_SHEAR: i64 = 64;

/// One Galois orbit of singular points.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    /// Index of the homogeneous coordinate set to one.
    pub chart: usize,
    /// The two remaining coordinates, in variable order.
    pub coords: [ExactScalar; 2],
    pub residue_degree: usize,
    pub orbit_size: usize,
    /// Exact representative over its residue field.
    pub point: ProjPoint,
}

/// Result of [`singular_points`].
#[derive(Clone, Debug, Default)]
pub struct SingularLocus {
    pub points: Vec<SingularPoint>,
    /// Eliminant factors whose roots exceed the extension bound.
    pub unresolved: Vec<String>,
}

/// Check that `F` has no repeated factor.
pub fn check_squarefree(f: &HomogPoly) -> Result<(), Error> {
    let p = f.poly();
    let mut g = p.clone();
    for v in 0..3 {
        g = g.gcd(&p.derivative(v));
        if g.is_constant() {
            return Ok(());
        }
    }
    Err(Error::NotSquareFree {
        witness: format_poly(&g, &f.vars()),
    })
}

/// All singular points of a reduced curve, one record per Galois orbit, with
/// orbits beyond the extension bound returned as certificates.
pub fn singular_points(f: &HomogPoly, cfg: &ExtensionConfig) -> Result<SingularLocus, Error> {
    check_squarefree(f)?;
    let mut locus = SingularLocus::default();
    if f.degree() < 2 {
        return Ok(locus);
    }
    affine_points(f, cfg, &mut locus)?;
    infinite_points(f, cfg, &mut locus)?;
    for p in &locus.points {
        for i in 0..3 {
            let v = f
                .partial(i)
                .map_coeffs(|c| NfElem::Rat(c.clone()))
                .eval(&p.point.coords);
            assert!(
                v.is_zero(),
                "gradient does not vanish at a reported singular point"
            );
        }
        assert!(f.eval(&p.point.coords).is_zero());
    }
    locus.points.sort_by_cached_key(sort_key);
    Ok(locus)
}

fn sort_key(p: &SingularPoint) -> (usize, usize, String) {
    let minpoly = p
        .point
        .field
        .as_ref()
        .map(|k| upoly_to_string(k.minpoly(), "t"))
        .unwrap_or_default();
    let c = p
        .coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    (p.chart, p.residue_degree, format!("{minpoly};{c}"))
}

fn specialize(g: &MPoly<Rat>, theta: &NfElem) -> UPoly<NfElem> {
    UPoly::new(
        g.coeffs_in(1)
            .iter()
            .map(|c| eval_rat(&c.to_upoly(0), theta))
            .collect(),
    )
}

fn make_point(
    field: Option<Arc<NumberField>>,
    coords: [NfElem; 3],
    chart: usize,
) -> Result<SingularPoint, Error> {
    let degree = field.as_ref().map_or(1, |k| k.degree());
    let idx = other_indices(chart);
    let coords_exact = [
        ExactScalar::from_nf(&coords[idx[0]])?,
        ExactScalar::from_nf(&coords[idx[1]])?,
    ];
    Ok(SingularPoint {
        chart,
        coords: coords_exact,
        residue_degree: degree,
        orbit_size: degree,
        point: ProjPoint {
            field,
            coords,
            chart,
        },
    })
}

fn certificate(q: &UPoly<Rat>) -> String {
    upoly_to_string(&primitive_integer(q), "t")
}

fn affine_points(
    f: &HomogPoly,
    cfg: &ExtensionConfig,
    locus: &mut SingularLocus,
) -> Result<(), Error> {
    let one = MPoly::one(2);
    let aff = f
        .poly()
        .substitute(&[MPoly::var(2, 0), MPoly::var(2, 1), one]);
    let Some(e) = aff.total_degree() else {
        return Ok(());
    };
    if e < 2 {
        return Ok(());
    }
    let top = aff.homogeneous_part(e);
    'shear: for k in 0..MAX_SHEAR {
        let kr = rat(k);
        if top.eval(&[-kr.clone(), rat(1)]).is_zero() {
            continue;
        }
        let x = MPoly::var(2, 0).sub(&MPoly::var(2, 1).scale(&kr));
        let g = aff.substitute(&[x, MPoly::var(2, 1)]);
        let (gx, gy) = (g.derivative(0), g.derivative(1));
        let mut elim = g.resultant(&gy, 1);
        for lambda in [0, 1] {
            let r = g.resultant(&gx.add(&gy.scale(&rat(lambda))), 1);
            if !r.is_zero() {
                elim = elim.gcd(&r);
            }
        }
        let elim = elim.to_upoly(0);
        if elim.degree().unwrap_or(0) == 0 {
            return Ok(());
        }
        let split = split_squarefree(&elim.squarefree_part(), cfg.bound);
        let mut found = Vec::new();
        for q in &split.factors {
            let (field, theta) = field_of_root(q)?;
            let common = specialize(&g, &theta)
                .gcd(&specialize(&gx, &theta))
                .gcd(&specialize(&gy, &theta));
            if common.degree().unwrap_or(0) == 0 {
                continue;
            }
            let s = common.squarefree_part();
            if s.degree() != Some(1) {
                continue 'shear;
            }
            let eta = s.coeff(0).neg().mul(&s.coeff(1).inv().unwrap());
            let xc = theta.sub(&eta.mul(&NfElem::Rat(kr.clone())));
            found.push(make_point(field, [xc, eta, NfElem::one()], 2)?);
        }
        if split.leftover.degree().unwrap_or(0) > 0
            && !leftover_is_spurious(&split.leftover, &g, &gx, &gy)
        {
            locus.unresolved.push(certificate(&split.leftover));
        }
        locus.points.extend(found);
        return Ok(());
    }
    Err(Error::UnresolvedOrbits("no admissible shear found".into()))
}

/// Whether the eliminant factor `l` carries no singular point, decided by a
/// gcd over `Q[X]/(l)` that succeeds without meeting a zero divisor.
fn leftover_is_spurious(l: &UPoly<Rat>, g: &MPoly<Rat>, gx: &MPoly<Rat>, gy: &MPoly<Rat>) -> bool {
    let k = NumberField::new(l.clone(), None);
    let theta = k.generator();
    let a = specialize(g, &theta);
    let common = a
        .try_gcd(&specialize(gx, &theta))
        .and_then(|c| c.try_gcd(&specialize(gy, &theta)));
    matches!(common, Some(c) if c.degree() == Some(0))
}

fn infinite_points(
    f: &HomogPoly,
    cfg: &ExtensionConfig,
    locus: &mut SingularLocus,
) -> Result<(), Error> {
    // points (x : 1 : 0)
    let on_line = |p: MPoly<Rat>| {
        p.substitute(&[MPoly::var(1, 0), MPoly::one(1), MPoly::zero(1)])
            .to_upoly(0)
    };
    let mut g = UPoly::zero();
    for i in 0..3 {
        g = g.gcd(&on_line(f.partial(i)));
    }
    if g.is_zero() {
        return Err(Error::NotSquareFree {
            witness: f.vars()[2].to_string(),
        });
    }
    if g.degree().unwrap_or(0) > 0 {
        let split = split_squarefree(&g.squarefree_part(), cfg.bound);
        for q in &split.factors {
            let (field, theta) = field_of_root(q)?;
            locus.points.push(make_point(
                field,
                [theta, NfElem::one(), NfElem::zero()],
                1,
            )?);
        }
        if split.leftover.degree().unwrap_or(0) > 0 {
            locus.unresolved.push(certificate(&split.leftover));
        }
    }
    // the point (1 : 0 : 0)
    let corner = [rat(1), rat(0), rat(0)];
    if (0..3).all(|i| f.partial(i).eval(&corner).is_zero()) {
        locus.points.push(make_point(
            None,
            [NfElem::one(), NfElem::zero(), NfElem::zero()],
            0,
        )?);
    }
    Ok(())
}

/// Multiplicity of the curve at a point: the order of its local equation.
pub fn multiplicity_at(f: &HomogPoly, p: &ProjPoint) -> Result<u32, Error> {
    Ok(crate::local::localize(f, p)?.order())
}
