use crate::census::{Census, CensusRecord};

pub const CSV_HEADER: [&str; 9] = [
    "d",
    "c",
    "n",
    "g",
    "d_hat",
    "c_hat_v",
    "n_hat_v",
    "verdict",
    "violations",
];

/// Violations as `name(left vs right)` joined by `;`.
pub(crate) fn violation_list(r: &CensusRecord) -> String {
    r.violated
        .iter()
        .map(|v| format!("{}({} vs {})", v.name, v.left, v.right))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn census_csv(census: &Census) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).unwrap();
    for r in &census.records {
        w.write_record([
            r.d.to_string(),
            r.c.to_string(),
            r.n.to_string(),
            r.g.to_string(),
            r.dual.d_hat.to_string(),
            r.dual.c_hat_v.to_string(),
            r.dual.n_hat_v.to_string(),
            r.verdict.to_string(),
            violation_list(r),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
