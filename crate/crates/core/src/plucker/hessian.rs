use crate::algebra::field::NfElem;
use crate::algebra::{MPoly, Rat};
use crate::curve::{HomogPoly, ProjPoint};
use crate::local::{local_intersection, ClassTag, LocalInvariants};
use crate::singular::SingularPoint;
use crate::Error;

/// Hessian determinant of `F`.
pub fn hessian(f: &HomogPoly) -> Result<HomogPoly, Error> {
    let second: Vec<Vec<MPoly<Rat>>> = (0..3)
        .map(|i| (0..3).map(|j| f.partial(i).derivative(j)).collect())
        .collect();
    let m = |i: usize, j: usize| &second[i][j];
    let minor = |a: usize, b: usize| m(1, a).mul(m(2, b)).sub(&m(1, b).mul(m(2, a)));
    let det = m(0, 0)
        .mul(&minor(1, 2))
        .sub(&m(0, 1).mul(&minor(0, 2)))
        .add(&m(0, 2).mul(&minor(0, 1)));
    if det.is_zero() {
        return Err(Error::DegenerateHessian);
    }
    HomogPoly::new(det, f.vars())
}

fn local_equation(f: &HomogPoly, p: &ProjPoint) -> MPoly<NfElem> {
    let idx = crate::curve::other_indices(p.chart);
    let mut images = vec![MPoly::zero(2); 3];
    images[p.chart] = MPoly::one(2);
    for (slot, &v) in idx.iter().enumerate() {
        images[v] = MPoly::var(2, slot).add(&MPoly::constant(2, p.coords[v].clone()));
    }
    f.poly()
        .map_coeffs(|c| NfElem::Rat(c.clone()))
        .substitute(&images)
}

/// Local intersection number of two curves at `p`; zero if `p` is off either.
pub fn intersection_multiplicity(
    f: &HomogPoly,
    g: &HomogPoly,
    p: &ProjPoint,
) -> Result<u32, Error> {
    local_intersection(&local_equation(f, p), &local_equation(g, p))
}

/// Flex orders of the two branches of a node, summed: the intersection of
/// the curve with its own tangent cone is `6 + e1 + e2`. `None` when a tangent
/// line is a component of the curve.
pub fn node_branch_flexes(f: &HomogPoly, p: &ProjPoint) -> Result<Option<u32>, Error> {
    let germ = local_equation(f, p);
    let cone = germ.homogeneous_part(2);
    match local_intersection(&germ, &cone) {
        Ok(i) => Ok(Some(i - 6)),
        Err(Error::SharedComponent) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Hessian intersection at one singular orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointContribution {
    pub index: usize,
    pub orbit_size: usize,
    pub intersection: u32,
    /// Inflections of the branches at a node, from the tangent cone.
    pub branch_flexes: Option<u32>,
    /// 8 at a cusp, `6 + branch_flexes` at a node.
    pub expected: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianReport {
    pub hessian_degree: u32,
    pub per_point: Vec<PointContribution>,
    /// `d * deg H = 3d(d-2)`.
    pub bezout_total: i64,
    /// Intersections left for smooth points: inflections with multiplicity.
    pub inflection_tally: i64,
    /// Inflections of node branches, orbit-weighted.
    pub branch_flex_tally: i64,
    /// Whether every singular point is a node or a cusp.
    pub nodes_and_cusps_only: bool,
    /// Both inflection tallies together against the predicted dual cusp count.
    pub tally_matches_dual: Option<bool>,
    /// `8c + 6n + c_hat = 3d(d-2)`, when only nodes and cusps occur.
    pub eqmain: Option<bool>,
}

impl HessianReport {
    /// Per-point values and tallies agree wherever the classical values are
    /// known: at nodes and cusps, and for curves with no other singularities.
    pub fn passed(&self) -> bool {
        self.per_point
            .iter()
            .all(|p| p.expected.is_none_or(|e| e == p.intersection))
            && (!self.nodes_and_cusps_only || self.tally_matches_dual != Some(false))
            && self.eqmain != Some(false)
    }
}

/// Intersect the Hessian with the curve at each singular orbit and compare
/// with the classical contributions.
pub fn hessian_audit(
    f: &HomogPoly,
    points: &[(SingularPoint, LocalInvariants)],
    c_hat_v: Option<i64>,
) -> Result<HessianReport, Error> {
    let h = hessian(f)?;
    let d = f.degree() as i64;
    let mut per_point = Vec::new();
    let (mut cusps, mut nodes) = (0i64, 0i64);
    let mut ordinary = true;
    for (index, (p, loc)) in points.iter().enumerate() {
        let intersection = intersection_multiplicity(f, &h, &p.point)?;
        let (branch_flexes, expected) = match loc.class_tag {
            ClassTag::Cusp => {
                cusps += p.orbit_size as i64;
                (None, Some(8))
            }
            ClassTag::Node => {
                nodes += p.orbit_size as i64;
                let e = node_branch_flexes(f, &p.point)?;
                (e, e.map(|e| 6 + e))
            }
            _ => {
                ordinary = false;
                (None, None)
            }
        };
        per_point.push(PointContribution {
            index,
            orbit_size: p.orbit_size,
            intersection,
            branch_flexes,
            expected,
        });
    }
    let bezout_total = 3 * d * (d - 2);
    let weighted = |v: fn(&PointContribution) -> i64| -> i64 {
        per_point.iter().map(|p| p.orbit_size as i64 * v(p)).sum()
    };
    let inflection_tally = bezout_total - weighted(|p| p.intersection as i64);
    let branch_flex_tally = weighted(|p| p.branch_flexes.unwrap_or(0) as i64);
    let tally_matches_dual = c_hat_v.map(|c| c == inflection_tally + branch_flex_tally);
    let eqmain = c_hat_v
        .filter(|_| ordinary)
        .map(|c| 8 * cusps + 6 * nodes + c == bezout_total);
    Ok(HessianReport {
        hessian_degree: h.degree(),
        per_point,
        bezout_total,
        inflection_tally,
        branch_flex_tally,
        nodes_and_cusps_only: ordinary,
        tally_matches_dual,
        eqmain,
    })
}
