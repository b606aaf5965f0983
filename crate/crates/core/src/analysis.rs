//! The full pipeline on one curve: singular locus, local invariants, global
//! numbers, dual prediction with its identities, inequalities, and the
//! optional Hessian audit, explicit dual and oracle cross-checks.

use crate::algebra::field::NfElem;
use crate::algebra::{upoly_to_string, ExtensionConfig};
use crate::curve::HomogPoly;
use crate::local::{local_report, localize, LocalInvariants};
use crate::oracle::check_orbit;
use crate::plucker::{
    aggregate, dual_curve, hessian, hessian_audit, inequality_audit, irreducibility,
    plucker_verify, predict_dual, DualCurveOptions, GlobalInvariants, Irreducibility, Prediction,
};
use crate::report::*;
use crate::singular::{singular_points, SingularPoint};
use crate::Error;

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalysisOptions {
    pub assume_irreducible: bool,
    pub extension: ExtensionConfig,
    pub hessian: bool,
    pub dual: bool,
    pub oracles: bool,
}

fn nf_string(e: &NfElem) -> String {
    upoly_to_string(&e.to_poly(), "t")
}

fn point_entry(p: &SingularPoint, l: &LocalInvariants) -> PointEntry {
    let (residue_field, embedding) = match &p.point.field {
        None => ("Q".to_string(), None),
        Some(k) => {
            let emb = k.embedding().map(|a| {
                let b = a.isolating_box();
                BoxEntry {
                    re: [b.re_lo.to_string(), b.re_hi.to_string()],
                    im: [b.im_lo.to_string(), b.im_hi.to_string()],
                }
            });
            (upoly_to_string(k.minpoly(), "t"), emb)
        }
    };
    PointEntry {
        residue_field,
        embedding,
        coordinates: p.point.coords.clone().map(|c| nf_string(&c)),
        orbit_size: p.orbit_size,
        local: local_entry(l),
    }
}

pub(crate) fn local_entry(l: &LocalInvariants) -> LocalEntry {
    LocalEntry {
        class_tag: l.class_tag.to_string(),
        m_p: l.m_p,
        mu: l.mu,
        r: l.r,
        delta: l.delta,
        c_vp: l.c_vp,
        n_vp: l.n_vp,
        tangents: l.tangents,
        branches: l
            .branches
            .iter()
            .map(|b| BranchEntry {
                multiplicity: b.multiplicity,
                orbit_size: b.orbit_size,
                expansion: b
                    .expansion
                    .iter()
                    .map(|t| TermEntry {
                        exponent: t.exponent.to_string(),
                        face_factor: t.face_factor.clone(),
                    })
                    .collect(),
                truncation_order: b.truncation_order.to_string(),
            })
            .collect(),
    }
}

fn global_entry(g: &GlobalInvariants) -> GlobalEntry {
    GlobalEntry {
        d: g.d,
        c_v: g.c_v,
        n_v: g.n_v,
        delta: g.delta,
        g: g.g,
    }
}

/// `(d, c_v, n_v)` of a curve assumed irreducible.
fn curve_numbers(f: &HomogPoly, cfg: &ExtensionConfig) -> Result<[i64; 3], Error> {
    let locus = singular_points(f, cfg)?;
    if !locus.unresolved.is_empty() {
        return Err(Error::UnresolvedOrbits(locus.unresolved.join("; ")));
    }
    let locals: Vec<(usize, LocalInvariants)> = locus
        .points
        .iter()
        .map(|p| local_report(f, &p.point, cfg).map(|l| (p.orbit_size, l)))
        .collect::<Result<_, _>>()?;
    let orbits: Vec<(usize, &LocalInvariants)> = locals.iter().map(|(w, l)| (*w, l)).collect();
    let gi = aggregate(f.degree(), &orbits, Irreducibility::Asserted)?;
    Ok([gi.d, gi.c_v, gi.n_v])
}

/// Run the pipeline. Findings (failed identities, inadmissible data) are
/// part of the report; errors are reserved for unusable input.
pub fn analyze(f: &HomogPoly, opts: &AnalysisOptions) -> Result<AnalysisReport, Error> {
    let cfg = &opts.extension;
    let vars = f.vars().map(str::to_string);
    let locus = singular_points(f, cfg)?;
    let mut report = AnalysisReport {
        schema: SCHEMA_VERSION,
        input: f.to_string(),
        variables: vars,
        degree: f.degree(),
        irreducibility: String::new(),
        singular_points: Vec::new(),
        unresolved: locus.unresolved.clone(),
        global: None,
        dual: None,
        identities: Vec::new(),
        inequalities: Vec::new(),
        hessian: None,
        dual_curve: None,
        oracle: None,
        warnings: Vec::new(),
        status: Status::Ok,
        nonexact: None,
    };
    let locals: Vec<(SingularPoint, LocalInvariants)> = locus
        .points
        .iter()
        .map(|p| local_report(f, &p.point, cfg).map(|l| (p.clone(), l)))
        .collect::<Result<_, _>>()?;
    report.singular_points = locals.iter().map(|(p, l)| point_entry(p, l)).collect();
    let status = irreducibility(f, &locus, opts.assume_irreducible);
    report.irreducibility = status.to_string();
    if !locus.unresolved.is_empty() {
        report.warnings.push(format!(
            "{} eliminant factor(s) exceed extension bound {}; rerun with a larger --extension-bound",
            locus.unresolved.len(),
            cfg.bound
        ));
        report.status = Status::Unresolved;
        return Ok(report);
    }
    if status == Irreducibility::Asserted {
        report
            .warnings
            .push("irreducibility is asserted, not verified".into());
    }
    let orbits: Vec<(usize, &LocalInvariants)> =
        locals.iter().map(|(p, l)| (p.orbit_size, l)).collect();
    let mut finding = false;
    let gi = match aggregate(f.degree(), &orbits, status) {
        Ok(gi) => gi,
        Err(Error::NegativeGenus(msg)) => {
            report.warnings.push(msg);
            report.status = Status::Finding;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.global = Some(global_entry(&gi));
    let mut c_hat = None;
    let mut prediction = None;
    if status == Irreducibility::Unknown {
        report.warnings.push(
            "irreducibility not established; dual prediction, identities and inequalities skipped (pass --assume-irreducible to assert it)"
                .into(),
        );
    } else if gi.d >= 2 {
        let p = predict_dual(&gi)?;
        let v = p.values();
        let (admissible, negative) = match &p {
            Prediction::Admissible(_) => (true, Vec::new()),
            Prediction::Inadmissible { negative, .. } => {
                (false, negative.iter().map(|s| s.to_string()).collect())
            }
        };
        finding |= !admissible;
        report.dual = Some(DualEntry {
            d_hat: v.d_hat,
            c_hat_v: v.c_hat_v,
            n_hat_v: v.n_hat_v,
            admissible,
            negative,
        });
        report.identities = plucker_verify(&gi, &v)
            .into_iter()
            .map(|i| IdentityEntry {
                name: i.name.into(),
                statement: i.statement.into(),
                lhs: i.lhs,
                rhs: i.rhs,
                holds: i.holds(),
            })
            .collect();
        finding |= report.identities.iter().any(|i| !i.holds);
        let ineq = inequality_audit(&gi);
        finding |= !ineq.all_satisfied();
        report.inequalities = ineq
            .entries
            .into_iter()
            .map(|e| InequalityDoc {
                name: e.name.into(),
                statement: e.statement.into(),
                left: e.left,
                right: e.right,
                satisfied: e.satisfied,
                applicable: e.applicable,
            })
            .collect();
        c_hat = Some(v.c_hat_v);
        prediction = Some(p);
    }
    if opts.hessian {
        match hessian_audit(f, &locals, c_hat) {
            Ok(h) => {
                finding |= !h.passed();
                report.hessian = Some(HessianEntry {
                    hessian: hessian(f)?.to_string(),
                    hessian_degree: h.hessian_degree,
                    per_point: h
                        .per_point
                        .iter()
                        .map(|p| HessianPointEntry {
                            point: p.index,
                            orbit_size: p.orbit_size,
                            intersection: p.intersection,
                            branch_flexes: p.branch_flexes,
                            expected: p.expected,
                        })
                        .collect(),
                    bezout_total: h.bezout_total,
                    inflection_tally: h.inflection_tally,
                    branch_flex_tally: h.branch_flex_tally,
                    nodes_and_cusps_only: h.nodes_and_cusps_only,
                    tally_matches_dual: h.tally_matches_dual,
                    eqmain: h.eqmain,
                    passed: h.passed(),
                });
            }
            Err(e) => report.warnings.push(format!("Hessian audit skipped: {e}")),
        }
    }
    if opts.dual {
        let entry = match &prediction {
            Some(Prediction::Admissible(v)) => {
                let points: Vec<_> = locals.iter().map(|(p, _)| p.point.clone()).collect();
                match dual_curve(f, &points, v.d_hat, &DualCurveOptions::default()) {
                    Ok(g) => {
                        let observed = match curve_numbers(&g, cfg) {
                            Ok(o) => Some(o),
                            Err(e) => {
                                report
                                    .warnings
                                    .push(format!("dual curve not analyzed: {e}"));
                                None
                            }
                        };
                        let matches = observed.map(|o| o == [v.d_hat, v.c_hat_v, v.n_hat_v]);
                        finding |= matches == Some(false);
                        DualCurveEntry {
                            equation: Some(g.to_string()),
                            failure: None,
                            observed,
                            matches_prediction: matches,
                        }
                    }
                    Err(e) => DualCurveEntry {
                        equation: None,
                        failure: Some(e.to_string()),
                        observed: None,
                        matches_prediction: None,
                    },
                }
            }
            _ => DualCurveEntry {
                equation: None,
                failure: Some("no admissible dual prediction".into()),
                observed: None,
                matches_prediction: None,
            },
        };
        report.dual_curve = Some(entry);
    }
    if opts.oracles {
        let mut exact = Vec::new();
        let mut numeric = Vec::new();
        for (index, (p, l)) in locals.iter().enumerate() {
            let check = check_orbit(index, &localize(f, &p.point)?, l, cfg)?;
            finding |= !check.passed();
            exact.push(OracleEntry {
                point: index,
                delta_milnor: check.delta_milnor,
                delta_blowup: check.delta_blowup,
                agree: check.delta_ok(),
            });
            numeric.push(NumericEntry {
                point: index,
                r: check.numeric.as_ref().map(|n| n.r),
                multiplicities: check.numeric.as_ref().map(|n| n.multiplicities.clone()),
                confident: check.numeric.as_ref().is_some_and(|n| n.confident),
                agrees_with_exact: check.branches_ok(),
            });
        }
        report.oracle = Some(exact);
        report.nonexact = Some(NonexactEntry {
            numeric_branches: numeric,
        });
    }
    if finding {
        report.status = Status::Finding;
    }
    Ok(report)
}
