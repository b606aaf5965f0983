use num_integer::Integer;

use crate::algebra::field::NfElem;
use crate::algebra::{Coeff, MPoly, Rat, UPoly};
use crate::curve::{other_indices, HomogPoly, LocalPoly, ProjPoint};
use crate::Error;

/// Local equation of `F` at `p`: dehomogenized in the point's chart and
/// translated so that `p` is the origin.
pub fn localize(f: &HomogPoly, p: &ProjPoint) -> Result<LocalPoly, Error> {
    if !f.eval(&p.coords).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let idx = other_indices(p.chart);
    let mut images = vec![MPoly::zero(2); 3];
    images[p.chart] = MPoly::one(2);
    for (slot, &v) in idx.iter().enumerate() {
        images[v] = MPoly::var(2, slot).add(&MPoly::constant(2, p.coords[v].clone()));
    }
    let poly = f
        .poly()
        .map_coeffs(|c| NfElem::Rat(c.clone()))
        .substitute(&images);
    let vars = f.vars();
    Ok(LocalPoly {
        vars: [vars[idx[0]].to_string(), vars[idx[1]].to_string()],
        field: p.field.clone(),
        poly,
    })
}

/// `f(x + k y, y)`.
pub fn shear(f: &MPoly<NfElem>, k: i64) -> MPoly<NfElem> {
    if k == 0 {
        return f.clone();
    }
    let x = MPoly::var(2, 0).add(&MPoly::var(2, 1).scale(&NfElem::from_i64(k)));
    f.substitute(&[x, MPoly::var(2, 1)])
}

/// One compact edge of a Newton polygon, from the end nearer the `y`-axis to
/// the end nearer the `x`-axis. Points are `(i, j)` for `x^i y^j`.
#[derive(Clone, Debug)]
pub struct Segment {
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// Order in `x` of the roots `y(x)` this edge accounts for.
    pub inclination: Rat,
    /// Coefficients of the support points lying on the edge.
    pub face: Vec<((u32, u32), NfElem)>,
}

impl Segment {
    /// Inclination `a / b` in lowest terms.
    pub fn slope(&self) -> (u32, u32) {
        let di = self.end.0 - self.start.0;
        let dj = self.start.1 - self.end.1;
        let g = di.gcd(&dj);
        (di / g, dj / g)
    }

    /// Face polynomial `sum c_ij T^((j - j_end) / b)`.
    pub fn face_poly(&self) -> UPoly<NfElem> {
        let (_, b) = self.slope();
        let len = ((self.start.1 - self.end.1) / b) as usize;
        let mut cs = vec![NfElem::zero(); len + 1];
        for ((_, j), c) in &self.face {
            cs[((j - self.end.1) / b) as usize] = c.clone();
        }
        UPoly::new(cs)
    }
}

/// Lower-left hull of the support. An empty segment list means the germ is a
/// monomial times a unit; `vertices` then holds that monomial.
#[derive(Clone, Debug)]
pub struct NewtonPolygon {
    pub vertices: Vec<(u32, u32)>,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    pub fn is_degenerate(&self) -> bool {
        self.segments.is_empty()
    }
}

pub fn newton_polygon(f: &LocalPoly) -> Result<NewtonPolygon, Error> {
    if f.poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.poly.constant_term().is_zero() {
        return Err(Error::NotOnCurve);
    }
    Ok(polygon_of(&f.poly))
}

pub(crate) fn polygon_of(f: &MPoly<NfElem>) -> NewtonPolygon {
    let pts: Vec<(u32, u32)> = f.terms().keys().map(|e| (e[0], e[1])).collect();
    let imin = pts.iter().map(|p| p.0).min().unwrap();
    let jmin = pts.iter().map(|p| p.1).min().unwrap();
    let start = (
        imin,
        pts.iter()
            .filter(|p| p.0 == imin)
            .map(|p| p.1)
            .min()
            .unwrap(),
    );
    let stop = (
        pts.iter()
            .filter(|p| p.1 == jmin)
            .map(|p| p.0)
            .min()
            .unwrap(),
        jmin,
    );
    let mut vertices = vec![start];
    let mut cur = start;
    while cur != stop {
        // next vertex: smallest slope (di/dj steepest descent), farthest on ties
        let mut best: Option<(u32, u32)> = None;
        for &p in &pts {
            if p.1 >= cur.1 || p.0 <= cur.0 {
                continue;
            }
            best = Some(match best {
                None => p,
                Some(b) => {
                    // compare (p.0-cur.0)/(cur.1-p.1) with (b.0-cur.0)/(cur.1-b.1)
                    let lhs = (p.0 - cur.0) as u64 * (cur.1 - b.1) as u64;
                    let rhs = (b.0 - cur.0) as u64 * (cur.1 - p.1) as u64;
                    if lhs < rhs || (lhs == rhs && p.1 < b.1) {
                        p
                    } else {
                        b
                    }
                }
            });
        }
        cur = best.expect("hull walk reaches the lowest point");
        vertices.push(cur);
    }
    let mut segments = Vec::new();
    for w in vertices.windows(2) {
        let (s, e) = (w[0], w[1]);
        let (di, dj) = ((e.0 - s.0) as i64, (s.1 - e.1) as i64);
        let face = f
            .terms()
            .iter()
            .filter(|(x, _)| {
                let (i, j) = (x[0] as i64, x[1] as i64);
                (i - s.0 as i64) * dj == (s.1 as i64 - j) * di && j <= s.1 as i64 && j >= e.1 as i64
            })
            .map(|(x, c)| ((x[0], x[1]), c.clone()))
            .collect();
        segments.push(Segment {
            start: s,
            end: e,
            inclination: Rat::new(di.into(), dj.into()),
            face,
        });
    }
    NewtonPolygon { vertices, segments }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> NewtonPolygon {
        newton_polygon(&LocalPoly::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn cusp_and_tacnode_segments() {
        let p = poly("y^2 - x^3");
        assert_eq!(p.segments.len(), 1);
        assert_eq!((p.segments[0].start, p.segments[0].end), ((0, 2), (3, 0)));
        let t = poly("y^2 - x^4 + x^2*y^3");
        let s = &t.segments[0];
        assert_eq!((s.start, s.end), ((0, 2), (4, 0)));
        assert_eq!(s.slope(), (2, 1));
        assert_eq!(s.face_poly().degree(), Some(2));
    }

    #[test]
    fn monomial_germ_is_degenerate() {
        let p = poly("x*y");
        assert!(p.is_degenerate());
        assert_eq!(p.vertices, vec![(1, 1)]);
    }

    #[test]
    fn several_edges() {
        // y divides f, so the hull stops on the line j = 1
        let p = poly("y*(y - x)*(y - x^2)");
        let slopes: Vec<_> = p.segments.iter().map(|s| s.slope()).collect();
        assert_eq!(p.vertices.last(), Some(&(3, 1)));
        assert_eq!(slopes, vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn localize_cuspidal_cubic() {
        let f = HomogPoly::parse("y^2*z - x^3").unwrap();
        let g = localize(&f, &ProjPoint::rational([0, 0, 1])).unwrap();
        assert_eq!(g.to_string(), "-x^3 + y^2");
        assert!(matches!(
            localize(
                &HomogPoly::parse("x^2 + y^2 + z^2").unwrap(),
                &ProjPoint::rational([0, 0, 1])
            ),
            Err(Error::NotOnCurve)
        ));
    }
}
