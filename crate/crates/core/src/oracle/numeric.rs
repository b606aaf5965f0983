//! Branch count and multiplicities by numerical monodromy: the small roots
//! `y` of `f(x, y)` are followed once around a circle `|x| = eps` and the
//! cycles of the resulting permutation are the branches.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::algebra::field::NfElem;
use crate::algebra::{Coeff, MPoly};
use crate::curve::LocalPoly;
use crate::local::shear;
use crate::Error;

const RADII: [f64; 2] = [1e-2, 1e-3];
const MIN_STEP: f64 = 1e-6;

/// Approximate branch data. Never used in exact reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericBranches {
    pub r: u32,
    /// Branch multiplicities, largest first.
    pub multiplicities: Vec<u32>,
    /// Whether all radii gave the same answer.
    pub confident: bool,
}

/// Roots of `sum cs[k] y^k` by Aberth–Ehrlich, started from `start` when
/// given.
fn aberth(cs: &[Complex64], start: Option<&[Complex64]>) -> Option<Vec<Complex64>> {
    let n = cs.len() - 1;
    let lc = cs[n];
    let cs: Vec<Complex64> = cs.iter().map(|c| c / lc).collect();
    let eval = |z: Complex64| {
        let (mut v, mut d) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for c in cs.iter().rev() {
            d = d * z + v;
            v = v * z + c;
        }
        (v, d)
    };
    let mut z: Vec<Complex64> = match start {
        Some(s) => s.to_vec(),
        None => {
            let radius = cs[..n]
                .iter()
                .map(|c| c.norm())
                .fold(0.0, f64::max)
                .max(1e-300)
                .powf(1.0 / n as f64);
            (0..n)
                .map(|k| Complex64::from_polar(radius, 0.4 + TAU * k as f64 / n as f64))
                .collect()
        }
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(1e-300));
        }
        if moved < 1e-14 {
            return Some(z);
        }
    }
    Some(z)
}

/// Coefficients in `y` of `f(x0, y)`.
fn specialize(f: &[(u32, u32, Complex64)], deg_y: usize, x0: Complex64) -> Vec<Complex64> {
    let mut cs = vec![Complex64::new(0.0, 0.0); deg_y + 1];
    for &(i, j, c) in f {
        cs[j as usize] += c * x0.powu(i);
    }
    cs
}

/// The `m` roots of smallest modulus, if clearly separated from the rest.
fn small_roots(roots: &[Complex64], m: usize) -> Option<Vec<Complex64>> {
    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
    if sorted.len() > m && sorted[m - 1].norm() * 4.0 > sorted[m].norm() {
        return None;
    }
    Some(sorted[..m].to_vec())
}

fn centered(v: &[Complex64]) -> Vec<Complex64> {
    let c = v.iter().sum::<Complex64>() / v.len() as f64;
    v.iter().map(|z| z - c).collect()
}

/// Match `next` to `prev` after removing the common drift; `None` if the
/// match is not clear-cut.
fn match_roots(prev: &[Complex64], next: &[Complex64]) -> Option<Vec<usize>> {
    let (p, q) = (centered(prev), centered(next));
    let m = p.len();
    if m == 1 {
        return Some(vec![0]);
    }
    let mut sep = f64::INFINITY;
    for i in 0..m {
        for j in i + 1..m {
            sep = sep.min((p[i] - p[j]).norm());
        }
    }
    if sep == 0.0 {
        return None;
    }
    let mut perm = vec![usize::MAX; m];
    for (i, a) in p.iter().enumerate() {
        let (j, dist) = q
            .iter()
            .enumerate()
            .map(|(j, b)| (j, (a - b).norm()))
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())?;
        if dist > 0.3 * sep || perm.contains(&j) {
            return None;
        }
        perm[i] = j;
    }
    Some(perm)
}

fn monodromy(f: &[(u32, u32, Complex64)], deg_y: usize, m: usize, eps: f64) -> Option<Vec<u32>> {
    let roots = aberth(&specialize(f, deg_y, Complex64::new(eps, 0.0)), None)?;
    let start = small_roots(&roots, m)?;
    // position k of `current` follows the start root k
    let mut current = start.clone();
    let mut all = roots;
    let (mut theta, mut step) = (0.0f64, TAU / 64.0);
    while theta < TAU {
        let h = step.min(TAU - theta);
        let x0 = Complex64::from_polar(eps, theta + h);
        let roots = aberth(&specialize(f, deg_y, x0), Some(&all))?;
        let accepted =
            small_roots(&roots, m).and_then(|next| match_roots(&current, &next).map(|p| (next, p)));
        match accepted {
            Some((next, perm)) => {
                current = perm.iter().map(|&j| next[j]).collect();
                all = roots;
                theta += h;
                step = (step * 1.5).min(TAU / 64.0);
            }
            None => {
                step /= 2.0;
                if step < MIN_STEP {
                    return None;
                }
            }
        }
    }
    let perm = match_roots(&start, &current)?;
    let mut seen = vec![false; m];
    let mut cycles = Vec::new();
    for i in 0..m {
        if seen[i] {
            continue;
        }
        let (mut j, mut len) = (i, 0);
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        cycles.push(len);
    }
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Some(cycles)
}

/// Branch count and multiplicities of a germ with a complex embedding,
/// by monodromy at two radii.
pub fn numeric_branches(f: &LocalPoly) -> Result<NumericBranches, Error> {
    let m = f.order();
    if m == 0 {
        return Err(Error::NotOnCurve);
    }
    let cone = f.poly.homogeneous_part(m);
    let k = (0..)
        .find(|&k| !cone.eval(&[NfElem::from_i64(k), NfElem::one()]).is_zero())
        .unwrap();
    let g: MPoly<NfElem> = shear(&f.poly, k);
    let terms: Vec<(u32, u32, Complex64)> = g
        .terms()
        .iter()
        .map(|(e, c)| c.approx().map(|z| (e[0], e[1], z)))
        .collect::<Option<_>>()
        .ok_or(Error::Precision)?;
    let deg_y = g.degree_in(1).unwrap() as usize;
    let answers: Vec<Option<Vec<u32>>> = RADII
        .iter()
        .map(|&eps| monodromy(&terms, deg_y, m as usize, eps))
        .collect();
    let found: Vec<&Vec<u32>> = answers.iter().flatten().collect();
    let Some(first) = found.first() else {
        return Err(Error::Precision);
    };
    let confident = found.len() == RADII.len() && found.iter().all(|a| a == first);
    Ok(NumericBranches {
        r: first.len() as u32,
        multiplicities: (*first).clone(),
        confident,
    })
}
