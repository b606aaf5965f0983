//! Admissibility of `(d, c, n)` triples against the necessary conditions on
//! irreducible curves, one triple at a time or a whole degree at once.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::plucker::{inequality_suite, predict_from_numbers, DualPrediction};
use crate::Error;

/// Printed with every verdict.
pub const ADMISSIBLE_MEANING: &str =
    "admissible means the triple passes every implemented necessary condition; no curve is claimed to exist";

/// Constraint names in evaluation order. The Lefschetz bound appears under
/// the name matching the parity of `d`.
pub const REGISTRY: [&str; 11] = [
    "genus>=0",
    "d_hat>=1",
    "c_hat_v>=0",
    "n_hat_v>=0",
    "lefschetz-even",
    "lefschetz-odd",
    "inmain",
    "classical-strict",
    "classical-nodes",
    "fina",
    "hirzebruch-ivinskis",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Admissible,
    RuledOut,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Admissible => "admissible",
            Verdict::RuledOut => "ruled_out",
        })
    }
}

/// A failed constraint with its two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub name: &'static str,
    pub left: i64,
    pub right: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub d: i64,
    pub c: i64,
    pub n: i64,
    pub g: i64,
    pub dual: DualPrediction,
    pub verdict: Verdict,
    pub violated: Vec<Violation>,
}

impl CensusRecord {
    pub fn violates(&self, name: &str) -> bool {
        self.violated.iter().any(|v| v.name == name)
    }
}

/// Evaluate every constraint of the registry on one triple.
pub fn check_triple(d: i64, c: i64, n: i64) -> Result<CensusRecord, Error> {
    if d < 2 || c < 0 || n < 0 {
        return Err(Error::InvalidInput(format!(
            "need d >= 2, c >= 0, n >= 0; got ({d}, {c}, {n})"
        )));
    }
    let g = (d - 1) * (d - 2) / 2 - c - n;
    let dual = predict_from_numbers(d, c, n);
    let mut violated = Vec::new();
    let mut at_least = |name, value: i64, bound: i64| {
        if value < bound {
            violated.push(Violation {
                name,
                left: value,
                right: bound,
            });
        }
    };
    at_least("genus>=0", g, 0);
    at_least("d_hat>=1", dual.d_hat, 1);
    at_least("c_hat_v>=0", dual.c_hat_v, 0);
    at_least("n_hat_v>=0", dual.n_hat_v, 0);
    for e in inequality_suite(d, c, n, g).violations() {
        violated.push(Violation {
            name: e.name,
            left: e.left,
            right: e.right,
        });
    }
    let verdict = if violated.is_empty() {
        Verdict::Admissible
    } else {
        Verdict::RuledOut
    };
    Ok(CensusRecord {
        d,
        c,
        n,
        g,
        dual,
        verdict,
        violated,
    })
}

/// All triples of one degree with `c + n <= (d-1)(d-2)/2`.
#[derive(Clone, Debug)]
pub struct Census {
    pub d: i64,
    pub records: Vec<CensusRecord>,
}

impl Census {
    pub fn admissible(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::Admissible)
    }

    pub fn ruled_out_count(&self) -> usize {
        self.records.len() - self.admissible().count()
    }

    /// How many records each constraint rules out, in registry order.
    pub fn histogram(&self) -> BTreeMap<usize, (&'static str, usize)> {
        let mut h = BTreeMap::new();
        for r in &self.records {
            for v in &r.violated {
                let idx = REGISTRY.iter().position(|&n| n == v.name).unwrap();
                h.entry(idx).or_insert((v.name, 0)).1 += 1;
            }
        }
        h
    }
}

pub fn enumerate(d: i64) -> Result<Census, Error> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("need d >= 2; got {d}")));
    }
    let top = (d - 1) * (d - 2) / 2;
    let pairs: Vec<(i64, i64)> = (0..=top)
        .flat_map(|c| (0..=top - c).map(move |n| (c, n)))
        .collect();
    let records = pairs
        .par_iter()
        .map(|&(c, n)| check_triple(d, c, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Census { d, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_triples() {
        let r = check_triple(6, 9, 0).unwrap();
        assert_eq!(r.verdict, Verdict::Admissible);
        assert_eq!(
            (r.g, r.dual.d_hat, r.dual.c_hat_v, r.dual.n_hat_v),
            (1, 3, 0, 0)
        );

        let r = check_triple(6, 10, 0).unwrap();
        assert_eq!(r.verdict, Verdict::RuledOut);
        assert!(r.violated.contains(&Violation {
            name: "c_hat_v>=0",
            left: -8,
            right: 0
        }));
        assert!(r.violated.contains(&Violation {
            name: "lefschetz-even",
            left: 10,
            right: 6
        }));

        let r = check_triple(3, 2, 0).unwrap();
        assert!(r.violated.contains(&Violation {
            name: "genus>=0",
            left: -1,
            right: 0
        }));

        assert_eq!(check_triple(4, 3, 0).unwrap().verdict, Verdict::Admissible);
    }

    #[test]
    fn small_degrees() {
        let c2 = enumerate(2).unwrap();
        assert_eq!(c2.records.len(), 1);
        assert_eq!(c2.admissible().count(), 1);
        let c3 = enumerate(3).unwrap();
        let adm: Vec<_> = c3.admissible().map(|r| (r.c, r.n)).collect();
        assert_eq!(adm, vec![(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn sextics_with_ten_or_more_cusps_are_ruled_out() {
        let c6 = enumerate(6).unwrap();
        for r in c6.records.iter().filter(|r| r.n == 0) {
            assert_eq!(r.verdict == Verdict::Admissible, r.c <= 9, "c = {}", r.c);
        }
        let order: Vec<_> = c6.records.iter().map(|r| (r.c, r.n)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(check_triple(1, 0, 0).is_err());
        assert!(check_triple(4, -1, 0).is_err());
    }
}
