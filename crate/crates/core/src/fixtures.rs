//! Built-in curves and germs, each with a sidecar of expected invariants
//! that a fresh analysis must reproduce.

use serde::{Deserialize, Serialize};

use crate::algebra::ExtensionConfig;
use crate::curve::{HomogPoly, LocalPoly};
use crate::local::analyze_germ;
use crate::plucker::{global_invariants, predict_dual, singular_classes};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Projective curve in `x, y, z`.
    Curve,
    /// Germ at the origin in `x, y`.
    Germ,
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: Kind,
    polynomial: &'static str,
    sidecar: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveExpectation {
    pub d: i64,
    pub c_v: i64,
    pub n_v: i64,
    pub g: i64,
    pub d_hat: i64,
    pub c_hat_v: i64,
    pub n_hat_v: i64,
    /// Class tags of the singular orbits, counted with orbit size, sorted.
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermExpectation {
    pub class_tag: String,
    pub m_p: u32,
    pub mu: u32,
    pub r: u32,
    pub delta: u32,
    pub c_vp: u32,
    pub n_vp: u32,
}

static FIXTURES: &[Fixture] = &[
    Fixture {
        name: "smooth-conic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/smooth-conic.poly"),
        sidecar: include_str!("../fixtures/curves/smooth-conic.json"),
    },
    Fixture {
        name: "fermat-cubic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/fermat-cubic.poly"),
        sidecar: include_str!("../fixtures/curves/fermat-cubic.json"),
    },
    Fixture {
        name: "nodal-cubic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/nodal-cubic.poly"),
        sidecar: include_str!("../fixtures/curves/nodal-cubic.json"),
    },
    Fixture {
        name: "cuspidal-cubic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/cuspidal-cubic.poly"),
        sidecar: include_str!("../fixtures/curves/cuspidal-cubic.json"),
    },
    Fixture {
        name: "tricuspidal-quartic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/tricuspidal-quartic.poly"),
        sidecar: include_str!("../fixtures/curves/tricuspidal-quartic.json"),
    },
    Fixture {
        name: "tacnodal-quartic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/tacnodal-quartic.poly"),
        sidecar: include_str!("../fixtures/curves/tacnodal-quartic.json"),
    },
    Fixture {
        name: "node-two-cusps-quartic",
        kind: Kind::Curve,
        polynomial: include_str!("../fixtures/curves/node-two-cusps-quartic.poly"),
        sidecar: include_str!("../fixtures/curves/node-two-cusps-quartic.json"),
    },
    Fixture {
        name: "a1",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/a1.poly"),
        sidecar: include_str!("../fixtures/germs/a1.json"),
    },
    Fixture {
        name: "a2",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/a2.poly"),
        sidecar: include_str!("../fixtures/germs/a2.json"),
    },
    Fixture {
        name: "a3",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/a3.poly"),
        sidecar: include_str!("../fixtures/germs/a3.json"),
    },
    Fixture {
        name: "a4",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/a4.poly"),
        sidecar: include_str!("../fixtures/germs/a4.json"),
    },
    Fixture {
        name: "a5",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/a5.poly"),
        sidecar: include_str!("../fixtures/germs/a5.json"),
    },
    Fixture {
        name: "a6",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/a6.poly"),
        sidecar: include_str!("../fixtures/germs/a6.json"),
    },
    Fixture {
        name: "d4",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/d4.poly"),
        sidecar: include_str!("../fixtures/germs/d4.json"),
    },
    Fixture {
        name: "d5",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/d5.poly"),
        sidecar: include_str!("../fixtures/germs/d5.json"),
    },
    Fixture {
        name: "e6",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/e6.poly"),
        sidecar: include_str!("../fixtures/germs/e6.json"),
    },
    Fixture {
        name: "e7",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/e7.poly"),
        sidecar: include_str!("../fixtures/germs/e7.json"),
    },
    Fixture {
        name: "e8",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/e8.poly"),
        sidecar: include_str!("../fixtures/germs/e8.json"),
    },
    Fixture {
        name: "ordinary-4-fold",
        kind: Kind::Germ,
        polynomial: include_str!("../fixtures/germs/ordinary-4-fold.poly"),
        sidecar: include_str!("../fixtures/germs/ordinary-4-fold.json"),
    },
];

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

pub fn get(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

impl Fixture {
    pub fn polynomial(&self) -> &'static str {
        self.polynomial.trim()
    }

    pub fn sidecar(&self) -> &'static str {
        self.sidecar.trim()
    }

    pub fn curve(&self) -> Result<HomogPoly, Error> {
        HomogPoly::parse(self.polynomial())
    }

    pub fn germ(&self) -> Result<LocalPoly, Error> {
        LocalPoly::parse(self.polynomial())
    }

    pub fn curve_expectation(&self) -> Option<CurveExpectation> {
        (self.kind == Kind::Curve)
            .then(|| serde_json::from_str(self.sidecar).expect("valid curve sidecar"))
    }

    pub fn germ_expectation(&self) -> Option<GermExpectation> {
        (self.kind == Kind::Germ)
            .then(|| serde_json::from_str(self.sidecar).expect("valid germ sidecar"))
    }

    /// Recompute the sidecar values from the polynomial.
    pub fn observe(&self, cfg: &ExtensionConfig) -> Result<serde_json::Value, Error> {
        match self.kind {
            Kind::Curve => {
                let f = self.curve()?;
                let gi = global_invariants(&f, false, cfg)?;
                let dp = predict_dual(&gi)?.values();
                let e = CurveExpectation {
                    d: gi.d,
                    c_v: gi.c_v,
                    n_v: gi.n_v,
                    g: gi.g,
                    d_hat: dp.d_hat,
                    c_hat_v: dp.c_hat_v,
                    n_hat_v: dp.n_hat_v,
                    classes: singular_classes(&f, cfg)?,
                };
                Ok(serde_json::to_value(e).unwrap())
            }
            Kind::Germ => {
                let l = analyze_germ(&self.germ()?, cfg)?;
                let e = GermExpectation {
                    class_tag: l.class_tag.to_string(),
                    m_p: l.m_p,
                    mu: l.mu,
                    r: l.r,
                    delta: l.delta,
                    c_vp: l.c_vp,
                    n_vp: l.n_vp,
                };
                Ok(serde_json::to_value(e).unwrap())
            }
        }
    }

    /// Whether a fresh analysis reproduces the sidecar.
    pub fn validate(&self, cfg: &ExtensionConfig) -> Result<bool, Error> {
        let stored: serde_json::Value = serde_json::from_str(self.sidecar).expect("valid sidecar");
        Ok(self.observe(cfg)? == stored)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_is_complete_and_parses() {
        assert_eq!(all().iter().filter(|f| f.kind == Kind::Curve).count(), 7);
        assert_eq!(all().iter().filter(|f| f.kind == Kind::Germ).count(), 12);
        for f in all() {
            match f.kind {
                Kind::Curve => assert!(
                    f.curve().is_ok() && f.curve_expectation().is_some(),
                    "{}",
                    f.name
                ),
                Kind::Germ => assert!(
                    f.germ().is_ok() && f.germ_expectation().is_some(),
                    "{}",
                    f.name
                ),
            }
        }
        assert!(get("tricuspidal-quartic").is_some());
        assert!(get("no-such-curve").is_none());
    }

    #[test]
    fn germ_sidecars_match() {
        let cfg = ExtensionConfig::default();
        for f in all().iter().filter(|f| f.kind == Kind::Germ) {
            assert!(
                f.validate(&cfg).unwrap(),
                "{}: {}",
                f.name,
                f.observe(&cfg).unwrap()
            );
        }
    }
}
