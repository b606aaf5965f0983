use std::fmt;

use crate::algebra::factor::split_squarefree;
use crate::algebra::roots::rational_roots;
use crate::algebra::{rat, Coeff, ExtensionConfig, MPoly, Rat, UPoly};
use crate::curve::HomogPoly;
use crate::local::{local_report, LocalInvariants};
use crate::singular::{singular_points, SingularLocus, SingularPoint};
use crate::Error;

/// How irreducibility over the complex numbers was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Verified,
    Asserted,
    Unknown,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Irreducibility::Verified => "verified",
            Irreducibility::Asserted => "asserted",
            Irreducibility::Unknown => "unknown",
        })
    }
}

/// Curve-level virtual numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalInvariants {
    pub d: i64,
    pub c_v: i64,
    pub n_v: i64,
    pub delta: i64,
    pub g: i64,
    pub irreducibility: Irreducibility,
}

impl GlobalInvariants {
    /// Invariants of a hypothetical irreducible curve with the given numbers.
    pub fn from_numbers(d: i64, c_v: i64, n_v: i64) -> Self {
        GlobalInvariants {
            d,
            c_v,
            n_v,
            delta: c_v + n_v,
            g: (d - 1) * (d - 2) / 2 - c_v - n_v,
            irreducibility: Irreducibility::Asserted,
        }
    }
}

/// Sum orbit-weighted local numbers into global invariants.
pub fn aggregate(
    d: u32,
    orbits: &[(usize, &LocalInvariants)],
    irreducibility: Irreducibility,
) -> Result<GlobalInvariants, Error> {
    let d = d as i64;
    let c_v: i64 = orbits.iter().map(|(w, l)| *w as i64 * l.c_vp as i64).sum();
    let n_v: i64 = orbits.iter().map(|(w, l)| *w as i64 * l.n_vp as i64).sum();
    let gi = GlobalInvariants {
        d,
        c_v,
        n_v,
        delta: c_v + n_v,
        g: (d - 1) * (d - 2) / 2 - c_v - n_v,
        irreducibility,
    };
    if gi.g < 0 && irreducibility != Irreducibility::Unknown {
        return Err(Error::NegativeGenus(format!(
            "d = {d}, c_v = {c_v}, n_v = {n_v} give g = {}; the curve is not irreducible",
            gi.g
        )));
    }
    Ok(gi)
}

const LINES: [([i64; 3], [i64; 3]); 6] = [
    ([1, 2, 3], [2, -1, 5]),
    ([3, 1, -2], [1, 4, 1]),
    ([2, 5, 1], [-3, 1, 4]),
    ([1, -3, 7], [4, 2, -1]),
    ([5, 1, 2], [1, 7, -3]),
    ([2, -5, 3], [7, 3, 1]),
];

/// Restriction of `F` to the line through `a` and `b`, at `t = 1`.
fn restrict(f: &MPoly<Rat>, a: [i64; 3], b: [i64; 3]) -> UPoly<Rat> {
    let images: Vec<MPoly<Rat>> = (0..3)
        .map(|i| {
            MPoly::var(1, 0)
                .scale(&rat(a[i]))
                .add(&MPoly::constant(1, rat(b[i])))
        })
        .collect();
    f.substitute(&images).to_upoly(0)
}

fn irreducible_over_q_on_some_line(f: &HomogPoly) -> bool {
    let d = f.degree() as usize;
    LINES.iter().any(|(a, b)| {
        let p = restrict(f.poly(), *a, *b);
        if p.degree() != Some(d) || p.squarefree_part().degree() != Some(d) {
            return false;
        }
        let s = split_squarefree(&p, d);
        s.factors.len() == 1 && s.factors[0].degree() == Some(d)
            || s.factors.is_empty() && s.leftover_irreducible
    })
}

/// A rational point of the curve where the gradient does not vanish.
pub(crate) fn smooth_rational_point(f: &HomogPoly) -> Option<[Rat; 3]> {
    let grad: Vec<MPoly<Rat>> = (0..3).map(|i| f.partial(i)).collect();
    let smooth = |p: &[Rat; 3]| grad.iter().any(|g| !g.eval(p).is_zero());
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            if a == 0 && b == 0 {
                continue;
            }
            let line = f
                .poly()
                .substitute(&[
                    MPoly::constant(1, rat(a)),
                    MPoly::constant(1, rat(b)),
                    MPoly::var(1, 0),
                ])
                .to_upoly(0);
            if line.is_zero() {
                let p = [rat(a), rat(b), rat(0)];
                if smooth(&p) {
                    return Some(p);
                }
                continue;
            }
            for z in rational_roots(&line) {
                let p = [rat(a), rat(b), z];
                if smooth(&p) {
                    return Some(p);
                }
            }
        }
    }
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        .into_iter()
        .map(|p| p.map(rat))
        .find(|p| f.poly().eval(p).is_zero() && smooth(p))
}

/// Irreducibility status. A smooth curve is irreducible. Otherwise the
/// curve is irreducible over `Q` if its restriction to some fixed line is,
/// and a smooth rational point then rules out conjugate components.
pub fn irreducibility(f: &HomogPoly, locus: &SingularLocus, assume: bool) -> Irreducibility {
    let smooth = locus.points.is_empty() && locus.unresolved.is_empty();
    if smooth || (irreducible_over_q_on_some_line(f) && smooth_rational_point(f).is_some()) {
        Irreducibility::Verified
    } else if assume {
        Irreducibility::Asserted
    } else {
        Irreducibility::Unknown
    }
}

/// Global invariants computed from scratch.
pub fn global_invariants(
    f: &HomogPoly,
    assume_irreducible: bool,
    cfg: &ExtensionConfig,
) -> Result<GlobalInvariants, Error> {
    let locus = singular_points(f, cfg)?;
    if !locus.unresolved.is_empty() {
        return Err(Error::UnresolvedOrbits(locus.unresolved.join("; ")));
    }
    let locals: Vec<(SingularPoint, LocalInvariants)> = locus
        .points
        .iter()
        .map(|p| local_report(f, &p.point, cfg).map(|l| (p.clone(), l)))
        .collect::<Result<_, _>>()?;
    let orbits: Vec<(usize, &LocalInvariants)> =
        locals.iter().map(|(p, l)| (p.orbit_size, l)).collect();
    aggregate(
        f.degree(),
        &orbits,
        irreducibility(f, &locus, assume_irreducible),
    )
}

/// Class tags of the singular points, each orbit repeated by its size, sorted.
pub fn singular_classes(f: &HomogPoly, cfg: &ExtensionConfig) -> Result<Vec<String>, Error> {
    let locus = singular_points(f, cfg)?;
    let mut out = Vec::new();
    for p in &locus.points {
        let tag = local_report(f, &p.point, cfg)?.class_tag.to_string();
        out.extend(std::iter::repeat_n(tag, p.orbit_size));
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(s: &str) -> GlobalInvariants {
        global_invariants(
            &HomogPoly::parse(s).unwrap(),
            false,
            &ExtensionConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn classical_curves() {
        let c = gi("y^2*z - x^3");
        assert_eq!((c.d, c.c_v, c.n_v, c.g), (3, 1, 0, 0));
        assert_eq!(c.irreducibility, Irreducibility::Verified);
        let s = gi("x^3 + y^3 + z^3");
        assert_eq!((s.c_v, s.n_v, s.g), (0, 0, 1));
        let t = gi("x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)");
        assert_eq!((t.c_v, t.n_v, t.g), (3, 0, 0));
    }

    #[test]
    fn reducible_curves_are_not_verified() {
        let f = HomogPoly::parse("x*y*z").unwrap();
        let locus = singular_points(&f, &ExtensionConfig::default()).unwrap();
        assert_eq!(irreducibility(&f, &locus, false), Irreducibility::Unknown);
        // conjugate lines x = +-i y: irreducible over Q only
        let f = HomogPoly::parse("x^2 + y^2").unwrap();
        let locus = singular_points(&f, &ExtensionConfig::default()).unwrap();
        assert_eq!(irreducibility(&f, &locus, true), Irreducibility::Asserted);
    }

    #[test]
    fn false_assertion_is_caught_by_genus() {
        // three concurrent lines: an ordinary triple point with delta 3 > 1
        let f = HomogPoly::parse("x*y*(x + y)").unwrap();
        let e = global_invariants(&f, true, &ExtensionConfig::default()).unwrap_err();
        assert!(matches!(e, Error::NegativeGenus(_)));
    }
}
