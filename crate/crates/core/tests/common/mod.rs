//! Random curves and germs with planted singularities of known type.

#![allow(dead_code)]

use plucker::algebra::parse::parse_poly;
use plucker::algebra::{rat, MPoly, Rat};
use plucker::curve::{HomogPoly, LocalPoly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A germ normal form with its invariants.
#[derive(Clone, Copy, Debug)]
pub struct GermType {
    pub name: &'static str,
    pub poly: &'static str,
    pub class_tag: &'static str,
    pub m: u32,
    pub mu: u32,
    pub r: u32,
    pub delta: u32,
    pub c: u32,
    pub n: u32,
    /// Order beyond which higher terms do not change the type.
    pub det: u32,
}

const fn g(
    name: &'static str,
    poly: &'static str,
    class_tag: &'static str,
    [m, mu, r, delta, c, n, det]: [u32; 7],
) -> GermType {
    GermType {
        name,
        poly,
        class_tag,
        m,
        mu,
        r,
        delta,
        c,
        n,
        det,
    }
}

pub const GERMS: [GermType; 12] = [
    g("A1", "y^2 - x^2", "node", [2, 1, 2, 1, 0, 1, 2]),
    g("A2", "y^2 - x^3", "cusp", [2, 2, 1, 1, 1, 0, 3]),
    g("A3", "y^2 - x^4", "tacnode", [2, 3, 2, 2, 0, 2, 4]),
    g("A4", "y^2 - x^5", "A_4", [2, 4, 1, 2, 1, 1, 5]),
    g("A5", "y^2 - x^6", "A_5", [2, 5, 2, 3, 0, 3, 6]),
    g("A6", "y^2 - x^7", "A_6", [2, 6, 1, 3, 1, 2, 7]),
    g("D4", "x^2*y - y^3", "D_4", [3, 4, 3, 3, 0, 3, 3]),
    g("D5", "x^2*y + y^4", "D_5", [3, 5, 2, 3, 1, 2, 4]),
    g("E6", "x^3 + y^4", "E_6", [3, 6, 1, 3, 2, 1, 4]),
    g("E7", "x^3 + x*y^3", "E_7", [3, 7, 2, 4, 1, 3, 4]),
    g("E8", "x^3 + y^5", "E_8", [3, 8, 1, 4, 2, 2, 5]),
    g(
        "X9",
        "x*y*(x - y)*(x + y)",
        "ordinary_4_fold",
        [4, 9, 4, 6, 0, 6, 4],
    ),
];

pub fn germ_type(name: &str) -> GermType {
    *GERMS.iter().find(|g| g.name == name).unwrap()
}

fn small(rng: &mut ChaCha8Rng, k: i64) -> Rat {
    rat(rng.gen_range(-k..=k))
}

/// Random invertible integer matrix with entries in [-2, 2].
fn unimodular_ish(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    loop {
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let det = if n == 2 {
            m[0][0] * m[1][1] - m[0][1] * m[1][0]
        } else {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        };
        if det != 0 {
            return m;
        }
    }
}

fn linear_images(m: &[Vec<i64>]) -> Vec<MPoly<Rat>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n).fold(MPoly::zero(n), |acc, j| {
                acc.add(&MPoly::var(n, j).scale(&rat(m[i][j])))
            })
        })
        .collect()
}

/// Random terms of total degree in `lo..=hi` in `nvars` variables, of which
/// the first two are used.
fn random_terms(rng: &mut ChaCha8Rng, lo: u32, hi: u32, nvars: usize) -> MPoly<Rat> {
    let mut p = MPoly::zero(nvars);
    for k in lo..=hi {
        for i in 0..=k {
            if rng.gen_bool(0.5) {
                let mut e = vec![0; nvars];
                e[0] = i;
                e[1] = k - i;
                p.add_term(e, small(rng, 3));
            }
        }
    }
    p
}

/// The normal form after a random linear change of coordinates, plus random
/// terms of order above its determinacy.
pub fn planted_germ(rng: &mut ChaCha8Rng, t: &GermType) -> LocalPoly {
    let base = parse_poly(t.poly, &["x", "y"]).unwrap();
    let moved = base.substitute(&linear_images(&unimodular_ish(rng, 2)));
    let noise = random_terms(rng, t.det + 1, t.det + 3, 2);
    LocalPoly::from_rational(&moved.add(&noise))
}

/// Germ types that fit in a quartic with determinacy respected.
pub const QUARTIC_PLANTABLE: [&str; 3] = ["A1", "A2", "D4"];

/// A plane quartic with the given germ planted at the image of (0 : 0 : 1)
/// under a random integer change of coordinates.
pub fn planted_quartic(rng: &mut ChaCha8Rng, t: &GermType) -> HomogPoly {
    let base = parse_poly(t.poly, &["x", "y", "z"]).unwrap();
    let noise = random_terms(rng, t.det + 1, 4, 3);
    let affine = base.add(&noise);
    let f = MPoly::from_terms(
        3,
        affine
            .terms()
            .iter()
            .map(|(e, c)| (vec![e[0], e[1], 4 - e[0] - e[1]], c.clone())),
    );
    let moved = f.substitute(&linear_images(&unimodular_ish(rng, 3)));
    HomogPoly::new(moved, ["x", "y", "z"]).unwrap()
}

/// Random homogeneous polynomial for printing round trips.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, d: u32) -> HomogPoly {
    loop {
        let mut p = MPoly::zero(3);
        for i in 0..=d {
            for j in 0..=d - i {
                if rng.gen_bool(0.4) {
                    let num = rng.gen_range(-20i64..=20);
                    let den = rng.gen_range(1i64..=4);
                    p.add_term(vec![i, j, d - i - j], Rat::new(num.into(), den.into()));
                }
            }
        }
        if !p.is_zero() {
            return HomogPoly::new(p, ["x", "y", "z"]).unwrap();
        }
    }
}
