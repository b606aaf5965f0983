use crate::algebra::ExtensionConfig;
use crate::curve::{HomogPoly, LocalPoly};
use crate::local::{analyze_germ, localize, LocalInvariants};
use crate::singular::singular_points;
use crate::Error;

use super::blowup::blowup_delta;
use super::numeric::{numeric_branches, NumericBranches};

/// Oracle verdicts for one singular orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCheck {
    pub index: usize,
    pub class_tag: String,
    pub delta_milnor: u32,
    pub delta_blowup: u32,
    /// Branch multiplicities over the complex numbers, largest first.
    pub exact_branches: Vec<u32>,
    /// `None` when the numeric route was inconclusive.
    pub numeric: Option<NumericBranches>,
}

impl OrbitCheck {
    pub fn delta_ok(&self) -> bool {
        self.delta_milnor == self.delta_blowup
    }

    /// `None` unless the numeric route answered with confidence.
    pub fn branches_ok(&self) -> Option<bool> {
        self.numeric
            .as_ref()
            .filter(|n| n.confident)
            .map(|n| n.multiplicities == self.exact_branches)
    }

    pub fn passed(&self) -> bool {
        self.delta_ok() && self.branches_ok() != Some(false)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub orbits: Vec<OrbitCheck>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.orbits.iter().all(OrbitCheck::passed)
    }

    pub fn failures(&self) -> Vec<usize> {
        self.orbits
            .iter()
            .filter(|o| !o.passed())
            .map(|o| o.index)
            .collect()
    }
}

/// Compare the claimed invariants of a germ with both oracles.
pub fn check_orbit(
    index: usize,
    germ: &LocalPoly,
    claimed: &LocalInvariants,
    cfg: &ExtensionConfig,
) -> Result<OrbitCheck, Error> {
    let (delta_blowup, _) = blowup_delta(germ, cfg)?;
    let mut exact_branches: Vec<u32> = claimed
        .branches
        .iter()
        .flat_map(|b| std::iter::repeat_n(b.multiplicity, b.orbit_size))
        .collect();
    exact_branches.sort_unstable_by(|a, b| b.cmp(a));
    Ok(OrbitCheck {
        index,
        class_tag: claimed.class_tag.to_string(),
        delta_milnor: claimed.delta,
        delta_blowup,
        exact_branches,
        numeric: numeric_branches(germ).ok(),
    })
}

/// Run both oracles on every singular orbit of a curve.
pub fn cross_validate(f: &HomogPoly, cfg: &ExtensionConfig) -> Result<OracleReport, Error> {
    let locus = singular_points(f, cfg)?;
    let mut orbits = Vec::new();
    for (index, p) in locus.points.iter().enumerate() {
        let germ = localize(f, &p.point)?;
        let claimed = analyze_germ(&germ, cfg)?;
        orbits.push(check_orbit(index, &germ, &claimed, cfg)?);
    }
    Ok(OracleReport { orbits })
}
