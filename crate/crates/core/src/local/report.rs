use std::fmt;

use crate::algebra::field::NfElem;
use crate::algebra::{Coeff, ExtensionConfig, UPoly};
use crate::curve::{HomogPoly, LocalPoly, ProjPoint};
use crate::Error;

use super::germ::localize;
use super::milnor::milnor_number;
use super::puiseux::{puiseux_branches, BranchDatum};

/// Informative singularity type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Smooth,
    Node,
    Cusp,
    Tacnode,
    OrdinaryKFold(u32),
    A(u32),
    D(u32),
    E(u32),
    Other,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::Smooth => write!(f, "smooth"),
            ClassTag::Node => write!(f, "node"),
            ClassTag::Cusp => write!(f, "cusp"),
            ClassTag::Tacnode => write!(f, "tacnode"),
            ClassTag::OrdinaryKFold(k) => write!(f, "ordinary_{k}_fold"),
            ClassTag::A(k) => write!(f, "A_{k}"),
            ClassTag::D(k) => write!(f, "D_{k}"),
            ClassTag::E(k) => write!(f, "E_{k}"),
            ClassTag::Other => write!(f, "other"),
        }
    }
}

/// Invariants of one singular point.
#[derive(Clone, Debug)]
pub struct LocalInvariants {
    pub m_p: u32,
    pub mu: u32,
    pub branches: Vec<BranchDatum>,
    pub r: u32,
    pub delta: u32,
    pub c_vp: u32,
    pub n_vp: u32,
    pub tangents: u32,
    pub class_tag: ClassTag,
}

/// Number of distinct tangent lines at the origin.
pub fn tangent_directions(f: &LocalPoly) -> u32 {
    let m = f.order();
    let cone = f.poly.homogeneous_part(m);
    // dehomogenize at x = 1 after moving the line x = 0 off the cone
    let k = (0..)
        .find(|&k| !cone.eval(&[NfElem::from_i64(k), NfElem::one()]).is_zero())
        .unwrap();
    let sheared = super::germ::shear(&cone, k);
    let t: UPoly<NfElem> = sheared.eval_var(0, &NfElem::one()).to_upoly(1);
    t.squarefree_part().degree().unwrap_or(0) as u32
}

fn classify(m: u32, mu: u32, r: u32, tangents: u32) -> ClassTag {
    match m {
        0 | 1 => ClassTag::Smooth,
        2 => match mu {
            1 => ClassTag::Node,
            2 => ClassTag::Cusp,
            3 => ClassTag::Tacnode,
            k => ClassTag::A(k),
        },
        3 if tangents >= 2 && mu >= 4 => ClassTag::D(mu),
        3 if tangents == 1 && (6..=8).contains(&mu) => ClassTag::E(mu),
        k if tangents == k && r == k && mu == (k - 1) * (k - 1) => ClassTag::OrdinaryKFold(k),
        _ => ClassTag::Other,
    }
}

/// Full local analysis of a germ at the origin.
pub fn analyze_germ(f: &LocalPoly, cfg: &ExtensionConfig) -> Result<LocalInvariants, Error> {
    let m_p = f.order();
    if m_p == 0 {
        return Err(Error::NotOnCurve);
    }
    let mu = milnor_number(f)?;
    let branches = puiseux_branches(f, cfg)?;
    let r: u32 = branches.iter().map(|b| b.orbit_size as u32).sum();
    let sum_m: u32 = branches
        .iter()
        .map(|b| b.multiplicity * b.orbit_size as u32)
        .sum();
    assert_eq!(
        sum_m, m_p,
        "branch multiplicities must add up to the multiplicity"
    );
    assert_eq!((mu + r - 1) % 2, 0, "mu + r - 1 must be even");
    let delta = (mu + r - 1) / 2;
    let c_vp: u32 = branches
        .iter()
        .map(|b| (b.multiplicity - 1) * b.orbit_size as u32)
        .sum();
    assert!(c_vp <= delta, "virtual cusps cannot exceed delta");
    let n_vp = delta - c_vp;
    assert!(delta >= m_p * (m_p - 1) / 2);
    let tangents = tangent_directions(f);
    let class_tag = classify(m_p, mu, r, tangents);
    Ok(LocalInvariants {
        m_p,
        mu,
        branches,
        r,
        delta,
        c_vp,
        n_vp,
        tangents,
        class_tag,
    })
}

/// Local invariants of `F` at the point `p`.
pub fn local_report(
    f: &HomogPoly,
    p: &ProjPoint,
    cfg: &ExtensionConfig,
) -> Result<LocalInvariants, Error> {
    analyze_germ(&localize(f, p)?, cfg)
}
