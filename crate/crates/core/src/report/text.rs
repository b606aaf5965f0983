use std::fmt::Write;

use crate::census::{Census, CensusRecord, ADMISSIBLE_MEANING};

use super::{AnalysisReport, Status};

fn flag(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn opt_flag(b: Option<bool>) -> &'static str {
    b.map_or("n/a", flag)
}

/// Aligned plain-text rendering of an analysis.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "curve            {}", r.input);
    let _ = writeln!(s, "degree           {}", r.degree);
    let _ = writeln!(s, "irreducibility   {}", r.irreducibility);
    let _ = writeln!(s, "singular orbits  {}", r.singular_points.len());
    for (i, p) in r.singular_points.iter().enumerate() {
        let l = &p.local;
        let _ = writeln!(
            s,
            "  [{i}] ({}) over {:<10} orbit {}  {:<16} m={} mu={} r={} delta={} c_vp={} n_vp={}",
            p.coordinates.join(" : "),
            p.residue_field,
            p.orbit_size,
            l.class_tag,
            l.m_p,
            l.mu,
            l.r,
            l.delta,
            l.c_vp,
            l.n_vp
        );
    }
    for u in &r.unresolved {
        let _ = writeln!(s, "  unresolved orbit, eliminant factor {u}");
    }
    if let Some(g) = &r.global {
        let _ = writeln!(
            s,
            "global           d={} c_v={} n_v={} delta={} g={}",
            g.d, g.c_v, g.n_v, g.delta, g.g
        );
    }
    if let Some(d) = &r.dual {
        let verdict = if d.admissible {
            "admissible".to_string()
        } else {
            format!("inadmissible: {} < 0", d.negative.join(", "))
        };
        let _ = writeln!(
            s,
            "dual prediction  d_hat={} c_hat_v={} n_hat_v={}  ({verdict})",
            d.d_hat, d.c_hat_v, d.n_hat_v
        );
    }
    if !r.identities.is_empty() {
        let _ = writeln!(s, "identities");
        for i in &r.identities {
            let _ = writeln!(
                s,
                "  {:<12} {:<48} {:>6} = {:<6} {}",
                i.name,
                i.statement,
                i.lhs,
                i.rhs,
                flag(i.holds)
            );
        }
    }
    if !r.inequalities.is_empty() {
        let _ = writeln!(s, "inequalities");
        for e in &r.inequalities {
            let status = if e.applicable {
                flag(e.satisfied)
            } else {
                "n/a"
            };
            let _ = writeln!(
                s,
                "  {:<20} {:>8} vs {:<8} {}",
                e.name, e.left, e.right, status
            );
        }
    }
    if let Some(h) = &r.hessian {
        let _ = writeln!(
            s,
            "hessian          degree {}: {}",
            h.hessian_degree, h.hessian
        );
        for p in &h.per_point {
            let exp = p.expected.map_or("-".to_string(), |e| e.to_string());
            let flexes = p
                .branch_flexes
                .map_or(String::new(), |e| format!("  branch flexes {e}"));
            let _ = writeln!(
                s,
                "  point [{}] x{}  (C.H)_p = {}  expected {}{}",
                p.point, p.orbit_size, p.intersection, exp, flexes
            );
        }
        let _ = writeln!(
            s,
            "  bezout {}  inflection tally {} + {}  tally = c_hat_v: {}  eqmain: {}  overall: {}",
            h.bezout_total,
            h.inflection_tally,
            h.branch_flex_tally,
            opt_flag(h.tally_matches_dual),
            opt_flag(h.eqmain),
            flag(h.passed)
        );
    }
    if let Some(dc) = &r.dual_curve {
        match (&dc.equation, &dc.failure) {
            (Some(eq), _) => {
                let _ = writeln!(s, "dual curve       {eq}");
                if let Some([d, c, n]) = dc.observed {
                    let _ = writeln!(
                        s,
                        "  analyzed: d={d} c_v={c} n_v={n}  matches prediction: {}",
                        opt_flag(dc.matches_prediction)
                    );
                }
            }
            (None, Some(f)) => {
                let _ = writeln!(s, "dual curve       not computed: {f}");
            }
            _ => {}
        }
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(s, "oracles");
        for e in o {
            let _ = writeln!(
                s,
                "  point [{}] delta milnor {} blow-up {}  {}",
                e.point,
                e.delta_milnor,
                e.delta_blowup,
                flag(e.agree)
            );
        }
    }
    if let Some(n) = &r.nonexact {
        for e in &n.numeric_branches {
            let m = e
                .multiplicities
                .as_ref()
                .map_or("inconclusive".to_string(), |m| format!("{m:?}"));
            let _ = writeln!(
                s,
                "  point [{}] numeric branches {m} (approximate)",
                e.point
            );
        }
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    let status = match r.status {
        Status::Ok => "ok",
        Status::Finding => "finding",
        Status::Unresolved => "unresolved",
    };
    let _ = writeln!(s, "status           {status}");
    s
}

pub fn render_record(r: &CensusRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "(d, c, n) = ({}, {}, {})", r.d, r.c, r.n);
    let _ = writeln!(
        s,
        "g = {}  d_hat = {}  c_hat_v = {}  n_hat_v = {}",
        r.g, r.dual.d_hat, r.dual.c_hat_v, r.dual.n_hat_v
    );
    let _ = writeln!(s, "verdict: {}", r.verdict);
    for v in &r.violated {
        let _ = writeln!(
            s,
            "  violated {:<20} left {:>6}  right {:>6}",
            v.name, v.left, v.right
        );
    }
    let _ = writeln!(s, "note: {ADMISSIBLE_MEANING}");
    s
}

pub fn render_census(c: &Census) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "degree {}: {} triples, {} admissible, {} ruled out",
        c.d,
        c.records.len(),
        c.admissible().count(),
        c.ruled_out_count()
    );
    let _ = writeln!(s, "ruled out by constraint:");
    for (name, count) in c.histogram().values() {
        let _ = writeln!(s, "  {name:<20} {count}");
    }
    let _ = writeln!(s, "admissible triples (c, n):");
    let list: Vec<String> = c
        .admissible()
        .map(|r| format!("({}, {})", r.c, r.n))
        .collect();
    for chunk in list.chunks(10) {
        let _ = writeln!(s, "  {}", chunk.join(" "));
    }
    let _ = writeln!(s, "note: {ADMISSIBLE_MEANING}");
    s
}
