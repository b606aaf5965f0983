use super::global::GlobalInvariants;

/// One inequality with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityEntry {
    pub name: &'static str,
    pub statement: &'static str,
    pub left: i64,
    pub right: i64,
    pub satisfied: bool,
    /// False when the inequality is only known for other degrees.
    pub applicable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub entries: Vec<InequalityEntry>,
}

impl InequalityReport {
    pub fn violations(&self) -> impl Iterator<Item = &InequalityEntry> {
        self.entries.iter().filter(|e| e.applicable && !e.satisfied)
    }

    pub fn all_satisfied(&self) -> bool {
        self.violations().next().is_none()
    }
}

fn le(name: &'static str, statement: &'static str, left: i64, right: i64) -> InequalityEntry {
    InequalityEntry {
        name,
        statement,
        left,
        right,
        satisfied: left <= right,
        applicable: true,
    }
}

/// Necessary conditions on the numbers of an irreducible curve.
pub fn inequality_suite(d: i64, c: i64, n: i64, g: i64) -> InequalityReport {
    let mut entries = Vec::new();
    if d % 2 == 0 {
        entries.push(le(
            "lefschetz-even",
            "c_v <= 3d/2 + 3(g-1)",
            c,
            3 * d / 2 + 3 * (g - 1),
        ));
    } else {
        entries.push(le(
            "lefschetz-odd",
            "c_v <= (3d-1)/2 + 3(g-1)",
            c,
            (3 * d - 1) / 2 + 3 * (g - 1),
        ));
    }
    let odd = if d % 2 == 1 { 1 } else { 0 };
    entries.push(le(
        "inmain",
        "8c_v + 6n_v <= 3d(d-2) - [d odd]",
        8 * c + 6 * n,
        3 * d * (d - 2) - odd,
    ));
    let d_hat = d * (d - 1) - 3 * c - 2 * n;
    entries.push(InequalityEntry {
        name: "classical-strict",
        statement: "d < d_hat^2 with d_hat > 0",
        left: d,
        right: d_hat * d_hat,
        satisfied: d_hat > 0 && d < d_hat * d_hat,
        applicable: true,
    });
    entries.push(le(
        "classical-nodes",
        "2c_v + 2n_v <= (d-1)(d-2)",
        2 * c + 2 * n,
        (d - 1) * (d - 2),
    ));
    let s = 3 * c + 2 * n;
    entries.push(InequalityEntry {
        name: "fina",
        statement: "d(d-2)(d^2-9) + (3c_v+2n_v)^2 + 27c_v + 20n_v >= 2d(d-1)(3c_v+2n_v)",
        left: d * (d - 2) * (d * d - 9) + s * s + 27 * c + 20 * n,
        right: 2 * d * (d - 1) * s,
        satisfied: d * (d - 2) * (d * d - 9) + s * s + 27 * c + 20 * n >= 2 * d * (d - 1) * s,
        applicable: true,
    });
    let mut hi = le(
        "hirzebruch-ivinskis",
        "16c_v + 9n_v <= d(5d-6) for even d",
        16 * c + 9 * n,
        d * (5 * d - 6),
    );
    hi.applicable = d % 2 == 0;
    entries.push(hi);
    InequalityReport { entries }
}

pub fn inequality_audit(gi: &GlobalInvariants) -> InequalityReport {
    inequality_suite(gi.d, gi.c_v, gi.n_v, gi.g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn get<'a>(r: &'a InequalityReport, name: &str) -> &'a InequalityEntry {
        r.entries.iter().find(|e| e.name == name).unwrap()
    }

    #[test]
    fn sextic_with_nine_cusps_is_extremal() {
        let r = inequality_suite(6, 9, 0, 1);
        assert!(r.all_satisfied());
        for name in ["inmain", "fina", "hirzebruch-ivinskis", "lefschetz-even"] {
            let e = get(&r, name);
            assert_eq!(e.left, e.right, "{name}");
        }
    }

    #[test]
    fn sextic_with_ten_cusps_violates_lefschetz() {
        let r = inequality_suite(6, 10, 0, 0);
        let names: Vec<_> = r.violations().map(|e| e.name).collect();
        assert!(names.contains(&"lefschetz-even"));
        assert_eq!(
            (
                get(&r, "lefschetz-even").left,
                get(&r, "lefschetz-even").right
            ),
            (10, 6)
        );
    }

    #[test]
    fn odd_degree_has_no_hirzebruch_ivinskis() {
        let r = inequality_suite(5, 0, 0, 6);
        assert!(!get(&r, "hirzebruch-ivinskis").applicable);
        assert!(r.entries.iter().any(|e| e.name == "lefschetz-odd"));
        assert!(r.entries.iter().all(|e| e.name != "lefschetz-even"));
    }

    #[test]
    fn tricuspidal_quartic_meets_inmain() {
        let e = inequality_suite(4, 3, 0, 0);
        assert_eq!((get(&e, "inmain").left, get(&e, "inmain").right), (24, 24));
    }
}
