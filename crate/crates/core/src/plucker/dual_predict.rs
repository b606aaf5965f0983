use serde::Serialize;

use crate::Error;

use super::global::{GlobalInvariants, Irreducibility};

/// Predicted numbers of the dual curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualPrediction {
    pub d_hat: i64,
    pub c_hat_v: i64,
    pub n_hat_v: i64,
}

/// Outcome of [`predict_dual`]. Negative dual numbers prove that no
/// irreducible curve carries the given data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prediction {
    Admissible(DualPrediction),
    Inadmissible {
        values: DualPrediction,
        negative: Vec<&'static str>,
    },
}

impl Prediction {
    pub fn values(&self) -> DualPrediction {
        match self {
            Prediction::Admissible(v) | Prediction::Inadmissible { values: v, .. } => *v,
        }
    }
}

/// Dual numbers of a hypothetical irreducible curve with the given numbers.
pub fn predict_from_numbers(d: i64, c_v: i64, n_v: i64) -> DualPrediction {
    let g = (d - 1) * (d - 2) / 2 - c_v - n_v;
    let d_hat = d * (d - 1) - 3 * c_v - 2 * n_v;
    let d_hat_star = 2 * d + 2 * (g - 1) - c_v;
    assert_eq!(d_hat, d_hat_star);
    let c_hat_v = 3 * d + 6 * (g - 1) - 2 * c_v;
    let twice = (d_hat - 1) * (d_hat - 2) - 2 * c_hat_v - 2 * g;
    assert_eq!(twice % 2, 0);
    DualPrediction {
        d_hat,
        c_hat_v,
        n_hat_v: twice / 2,
    }
}

pub fn predict_dual(gi: &GlobalInvariants) -> Result<Prediction, Error> {
    if gi.irreducibility == Irreducibility::Unknown {
        return Err(Error::IrreducibilityUnknown);
    }
    if gi.d < 2 {
        return Err(Error::DegenerateDegree(gi.d as usize));
    }
    let values = predict_from_numbers(gi.d, gi.c_v, gi.n_v);
    let mut negative = Vec::new();
    if values.d_hat < 0 {
        negative.push("d_hat");
    }
    if values.c_hat_v < 0 {
        negative.push("c_hat_v");
    }
    if values.n_hat_v < 0 {
        negative.push("n_hat_v");
    }
    Ok(if negative.is_empty() {
        Prediction::Admissible(values)
    } else {
        Prediction::Inadmissible { values, negative }
    })
}

/// One checked equality, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: &'static str,
    pub statement: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The four Plücker formulas, the second class formula and the two
/// biduality equations.
pub fn plucker_verify(gi: &GlobalInvariants, dp: &DualPrediction) -> Vec<Identity> {
    let (d, c, n, g) = (gi.d, gi.c_v, gi.n_v, gi.g);
    let (dh, ch, nh) = (dp.d_hat, dp.c_hat_v, dp.n_hat_v);
    let id = |name, statement, lhs, rhs| Identity {
        name,
        statement,
        lhs,
        rhs,
    };
    vec![
        id(
            "p11",
            "d_hat = d(d-1) - 3c_v - 2n_v",
            dh,
            d * (d - 1) - 3 * c - 2 * n,
        ),
        id(
            "p21",
            "2g = (d-1)(d-2) - 2c_v - 2n_v",
            2 * g,
            (d - 1) * (d - 2) - 2 * c - 2 * n,
        ),
        id(
            "p31",
            "d = d_hat(d_hat-1) - 3c_hat_v - 2n_hat_v",
            d,
            dh * (dh - 1) - 3 * ch - 2 * nh,
        ),
        id(
            "p41",
            "2g = (d_hat-1)(d_hat-2) - 2c_hat_v - 2n_hat_v",
            2 * g,
            (dh - 1) * (dh - 2) - 2 * ch - 2 * nh,
        ),
        id(
            "d_star",
            "d_hat = 2d + 2(g-1) - c_v",
            dh,
            2 * d + 2 * (g - 1) - c,
        ),
        id(
            "biduality_d",
            "d = 2d_hat + 2(g-1) - c_hat_v",
            d,
            2 * dh + 2 * (g - 1) - ch,
        ),
        id(
            "biduality_c",
            "c_v = 3d_hat + 6(g-1) - 2c_hat_v",
            c,
            3 * dh + 6 * (g - 1) - 2 * ch,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual(d: i64, c: i64, n: i64) -> DualPrediction {
        predict_dual(&GlobalInvariants::from_numbers(d, c, n))
            .unwrap()
            .values()
    }

    #[test]
    fn classical_duals() {
        assert_eq!(
            dual(3, 0, 1),
            DualPrediction {
                d_hat: 4,
                c_hat_v: 3,
                n_hat_v: 0
            }
        );
        assert_eq!(
            dual(4, 3, 0),
            DualPrediction {
                d_hat: 3,
                c_hat_v: 0,
                n_hat_v: 1
            }
        );
        assert_eq!(
            dual(3, 0, 0),
            DualPrediction {
                d_hat: 6,
                c_hat_v: 9,
                n_hat_v: 0
            }
        );
        assert_eq!(
            dual(3, 1, 0),
            DualPrediction {
                d_hat: 3,
                c_hat_v: 1,
                n_hat_v: 0
            }
        );
        assert_eq!(
            dual(2, 0, 0),
            DualPrediction {
                d_hat: 2,
                c_hat_v: 0,
                n_hat_v: 0
            }
        );
    }

    #[test]
    fn identities_hold_and_perturbations_fail() {
        let gi = GlobalInvariants::from_numbers(3, 0, 1);
        let dp = dual(3, 0, 1);
        assert!(plucker_verify(&gi, &dp).iter().all(Identity::holds));
        let bad = DualPrediction {
            d_hat: dp.d_hat + 1,
            ..dp
        };
        let failed: Vec<_> = plucker_verify(&gi, &bad)
            .into_iter()
            .filter(|i| !i.holds())
            .map(|i| i.name)
            .collect();
        assert!(failed.contains(&"p31") && failed.contains(&"biduality_d"));
    }

    #[test]
    fn inadmissible_data_is_a_result() {
        let p = predict_dual(&GlobalInvariants::from_numbers(6, 10, 0)).unwrap();
        match p {
            Prediction::Inadmissible { values, negative } => {
                assert_eq!(values.c_hat_v, -8);
                assert_eq!(negative, vec!["c_hat_v"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_irreducibility_is_refused() {
        let gi = GlobalInvariants {
            irreducibility: Irreducibility::Unknown,
            ..GlobalInvariants::from_numbers(3, 0, 0)
        };
        assert_eq!(predict_dual(&gi), Err(Error::IrreducibilityUnknown));
    }
}
