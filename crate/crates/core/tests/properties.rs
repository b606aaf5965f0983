//! Property tests for the algebra kernel, local invariants, Plücker layer,
//! census, reports and oracles.

mod common;

use plucker::algebra::factor::split_squarefree;
use plucker::algebra::parse::{format_poly, parse_poly};
use plucker::algebra::scalar::AlgebraicNumber;
use plucker::algebra::{rat, ExactScalar, ExtensionConfig, MPoly, Rat, UPoly};
use plucker::analysis::{analyze, AnalysisOptions};
use plucker::census::{check_triple, Verdict};
use plucker::curve::{HomogPoly, LocalPoly};
use plucker::fixtures::{self, Kind};
use plucker::local::{analyze_germ, local_report, LocalInvariants};
use plucker::oracle::blowup_delta;
use plucker::plucker::{
    global_invariants, hessian, hessian_audit, inequality_suite, plucker_verify, predict_dual, predict_from_numbers,
    GlobalInvariants,
};
use plucker::singular::singular_points;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{germ_type, planted_germ, planted_quartic, GERMS, QUARTIC_PLANTABLE};

fn cfg() -> ExtensionConfig {
    ExtensionConfig::default()
}

fn curve_fixtures() -> impl Iterator<Item = &'static fixtures::Fixture> {
    fixtures::all().iter().filter(|f| f.kind == Kind::Curve)
}

fn germ_fixtures() -> impl Iterator<Item = &'static fixtures::Fixture> {
    fixtures::all().iter().filter(|f| f.kind == Kind::Germ)
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| Rat::new(a.into(), b.into()))
}

fn invertible2() -> impl Strategy<Value = [[Rat; 2]; 2]> {
    [[small_rat(), small_rat()], [small_rat(), small_rat()]]
        .prop_filter("invertible", |m| &m[0][0] * &m[1][1] != &m[0][1] * &m[1][0])
}

fn invertible3() -> impl Strategy<Value = [[i64; 3]; 3]> {
    [[-2i64..=2, -2..=2, -2..=2], [-2..=2, -2..=2, -2..=2], [-2..=2, -2..=2, -2..=2]].prop_filter("invertible", |m| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            != 0
    })
}

/// Random polynomial in `nvars` variables with bounded degree and support.
fn random_poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = MPoly<Rat>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), small_rat()), 1..6).prop_map(move |ts| {
        let mut p = MPoly::zero(nvars);
        for (e, c) in ts {
            p.add_term(e, c);
        }
        p
    })
}

fn linear_change2(p: &MPoly<Rat>, m: &[[Rat; 2]; 2]) -> MPoly<Rat> {
    let img = |r: &[Rat; 2]| MPoly::var(2, 0).scale(&r[0]).add(&MPoly::var(2, 1).scale(&r[1]));
    p.substitute(&[img(&m[0]), img(&m[1])])
}

fn linear_change3(f: &HomogPoly, m: &[[i64; 3]; 3]) -> HomogPoly {
    let img = |r: &[i64; 3]| (0..3).fold(MPoly::zero(3), |acc, j| acc.add(&MPoly::var(3, j).scale(&rat(r[j]))));
    HomogPoly::new(f.poly().substitute(&[img(&m[0]), img(&m[1]), img(&m[2])]), ["x", "y", "z"]).unwrap()
}

fn signature(l: &LocalInvariants) -> (u32, u32, u32, u32, u32, u32, String, Vec<u32>) {
    let mut ms: Vec<u32> =
        l.branches.iter().flat_map(|b| std::iter::repeat_n(b.multiplicity, b.orbit_size)).collect();
    ms.sort_unstable();
    (l.m_p, l.mu, l.r, l.delta, l.c_vp, l.n_vp, l.class_tag.to_string(), ms)
}

fn orbit_multiset(f: &HomogPoly) -> Vec<(usize, usize, u32, u32)> {
    let locus = singular_points(f, &cfg()).unwrap();
    let mut out: Vec<_> = locus
        .points
        .iter()
        .map(|p| {
            let l = local_report(f, &p.point, &cfg()).unwrap();
            (p.residue_degree, p.orbit_size, l.m_p, l.delta)
        })
        .collect();
    out.sort();
    out
}

mod algebra {
    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn parse_print_parse_is_identity(p in random_poly(3, 5)) {
            let vars = ["x", "y", "z"];
            let printed = format_poly(&p, &vars);
            let back = parse_poly(&printed, &vars).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(format_poly(&back, &vars), printed);
        }

        #[test]
        fn resultant_is_antisymmetric_up_to_sign(a in random_poly(2, 3), b in random_poly(2, 3)) {
            prop_assume!(a.degree_in(1).unwrap_or(0) > 0 && b.degree_in(1).unwrap_or(0) > 0);
            let (r1, r2) = (a.resultant(&b, 1), b.resultant(&a, 1));
            prop_assert!(r1 == r2 || r1 == r2.neg());
        }

        #[test]
        fn resultant_vanishes_on_planted_common_factor(
            a in random_poly(2, 2), b in random_poly(2, 2), c in random_poly(2, 2)
        ) {
            prop_assume!(c.degree_in(1).unwrap_or(0) > 0);
            let (ac, bc) = (a.mul(&c), b.mul(&c));
            prop_assume!(!ac.is_zero() && !bc.is_zero());
            prop_assert!(ac.resultant(&bc, 1).is_zero());
        }

        #[test]
        fn resultant_vanishes_iff_common_factor(a in random_poly(2, 3), b in random_poly(2, 3)) {
            prop_assume!(a.degree_in(1).unwrap_or(0) > 0 && b.degree_in(1).unwrap_or(0) > 0);
            let g = a.gcd(&b);
            prop_assert_eq!(a.resultant(&b, 1).is_zero(), g.degree_in(1).unwrap_or(0) > 0);
        }

        #[test]
        fn split_accounts_for_every_root(roots in prop::collection::vec(-6i64..=6, 0..4), quad in 1i64..=7) {
            // distinct rational roots times an irreducible or split quadratic
            let mut roots = roots;
            roots.sort_unstable();
            roots.dedup();
            let mut p = UPoly::from_ints(&[-quad, 0, 1]);
            for r in &roots {
                p = p.mul(&UPoly::from_ints(&[-r, 1]));
            }
            prop_assume!(p.gcd(&p.derivative()).degree() == Some(0));
            let s = split_squarefree(&p, 4);
            let total: usize = s.factors.iter().map(|f| f.degree().unwrap()).sum::<usize>()
                + s.leftover.degree().unwrap_or(0);
            prop_assert_eq!(total, p.degree().unwrap());
            prop_assert!(s.factors.len() >= roots.len());
        }

        #[test]
        fn exact_scalar_field_laws(a in small_rat(), b in small_rat(), which in 0usize..2) {
            let c = &cfg();
            let r = AlgebraicNumber::roots_of(&UPoly::from_ints(&[-2, 0, 1])).unwrap();
            let alpha = ExactScalar::from_algebraic(r[which].clone());
            let (a, b) = (ExactScalar::rational(a), ExactScalar::rational(b));
            // (a + alpha) + b = a + (alpha + b)
            let l = a.add(&alpha, c).unwrap().add(&b, c).unwrap();
            let rr = a.add(&alpha.add(&b, c).unwrap(), c).unwrap();
            prop_assert!(l.equals(&rr).unwrap());
            // a * alpha = alpha * a
            prop_assert!(a.mul(&alpha, c).unwrap().equals(&alpha.mul(&a, c).unwrap()).unwrap());
            // alpha * (a + b) = alpha a + alpha b
            let l = alpha.mul(&a.add(&b, c).unwrap(), c).unwrap();
            let rr = alpha.mul(&a, c).unwrap().add(&alpha.mul(&b, c).unwrap(), c).unwrap();
            prop_assert!(l.equals(&rr).unwrap());
            // alpha^2 = 2
            prop_assert!(alpha.mul(&alpha, c).unwrap().equals(&ExactScalar::int(2)).unwrap());
        }
    }
}

mod singular {
    use super::*;

    #[test]
    fn partials_vanish_and_genus_is_non_negative_on_fixtures() {
        for fx in curve_fixtures() {
            let f = fx.curve().unwrap();
            let d = f.degree() as i64;
            let locus = singular_points(&f, &cfg()).unwrap();
            let mut delta = 0i64;
            for p in &locus.points {
                for i in 0..3 {
                    let v = f.partial(i).map_coeffs(|c| plucker::algebra::field::NfElem::Rat(c.clone()));
                    assert!(plucker::algebra::Coeff::is_zero(&v.eval(&p.point.coords)), "{}", fx.name);
                }
                delta += p.orbit_size as i64 * local_report(&f, &p.point, &cfg()).unwrap().delta as i64;
            }
            assert!(delta <= (d - 1) * (d - 2) / 2, "{}: delta {delta}", fx.name);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn orbit_invariants_survive_projective_change(m in invertible3(), idx in 0usize..7) {
            let fx = curve_fixtures().nth(idx).unwrap();
            prop_assume!(fx.name != "tacnodal-quartic" || idx % 2 == 0);
            let f = fx.curve().unwrap();
            let g = linear_change3(&f, &m);
            prop_assert_eq!(orbit_multiset(&f), orbit_multiset(&g), "{}", fx.name);
        }
    }
}

mod local {
    use super::*;

    #[test]
    fn lemma_relations_on_every_fixture_germ() {
        for fx in germ_fixtures() {
            let l = analyze_germ(&fx.germ().unwrap(), &cfg()).unwrap();
            assert_eq!(l.delta, l.c_vp + l.n_vp, "{}", fx.name);
            assert!(l.delta >= l.m_p * (l.m_p - 1) / 2, "{}", fx.name);
            let sum: u32 = l.branches.iter().map(|b| b.multiplicity * b.orbit_size as u32).sum();
            assert_eq!(sum, l.m_p, "{}", fx.name);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn invariant_under_units_and_linear_change(
            m in invertible2(), a in small_rat(), b in small_rat(), idx in 0usize..12
        ) {
            let fx = germ_fixtures().nth(idx).unwrap();
            let p = fx.germ().unwrap().as_rational().unwrap();
            let unit = MPoly::one(2).add(&MPoly::var(2, 0).scale(&a)).add(&MPoly::var(2, 1).scale(&b));
            let q = linear_change2(&p, &m).mul(&unit);
            let before = analyze_germ(&LocalPoly::from_rational(&p), &cfg()).unwrap();
            let after = analyze_germ(&LocalPoly::from_rational(&q), &cfg()).unwrap();
            prop_assert_eq!(signature(&before), signature(&after), "{}", fx.name);
        }

        #[test]
        fn planted_germs_have_their_type(seed in any::<u64>(), idx in 0usize..12) {
            let t = &GERMS[idx];
            let germ = planted_germ(&mut ChaCha8Rng::seed_from_u64(seed), t);
            let l = analyze_germ(&germ, &cfg()).unwrap();
            prop_assert_eq!(l.class_tag.to_string(), t.class_tag);
            prop_assert_eq!((l.m_p, l.mu, l.r, l.delta, l.c_vp, l.n_vp), (t.m, t.mu, t.r, t.delta, t.c, t.n));
        }
    }
}

mod plucker_layer {
    use super::*;

    fn triples(max_d: i64) -> impl Iterator<Item = (i64, i64, i64)> {
        (2..=max_d).flat_map(|d| {
            let top = (d - 1) * (d - 2) / 2;
            (0..=top).flat_map(move |c| (0..=top - c).map(move |n| (d, c, n)))
        })
    }

    proptest! {
        #[test]
        fn both_class_routes_agree_and_biduality_holds(d in 2i64..40, c in 0i64..400, n in 0i64..400) {
            let top = (d - 1) * (d - 2) / 2;
            prop_assume!(c + n <= top);
            let gi = GlobalInvariants::from_numbers(d, c, n);
            let dp = predict_from_numbers(d, c, n);
            for id in plucker_verify(&gi, &dp) {
                prop_assert!(id.holds(), "{} on ({d}, {c}, {n})", id.name);
            }
            // reverse equations recover (d, c) from the dual numbers
            let g = gi.g;
            prop_assert_eq!(dp.d_hat * (dp.d_hat - 1) - 3 * dp.c_hat_v - 2 * dp.n_hat_v, d);
            prop_assert_eq!(3 * dp.d_hat + 6 * (g - 1) - 2 * dp.c_hat_v, c);
        }

        #[test]
        fn dual_node_count_is_integral(
            (d, c, n) in (2i64..60)
                .prop_flat_map(|d| (Just(d), 0..=(d - 1) * (d - 2) / 2))
                .prop_flat_map(|(d, c)| (Just(d), Just(c), 0..=(d - 1) * (d - 2) / 2 - c))
        ) {
            let g = (d - 1) * (d - 2) / 2 - c - n;
            let dp = predict_from_numbers(d, c, n);
            let twice = (dp.d_hat - 1) * (dp.d_hat - 2) - 2 * dp.c_hat_v - 2 * g;
            prop_assert_eq!(twice % 2, 0);
            prop_assert_eq!(twice / 2, dp.n_hat_v);
        }
    }

    #[test]
    fn lefschetz_bound_is_the_dual_cusp_sign() {
        for (d, c, n) in triples(12) {
            let g = (d - 1) * (d - 2) / 2 - c - n;
            let lef = inequality_suite(d, c, n, g)
                .entries
                .into_iter()
                .find(|e| e.name.starts_with("lefschetz"))
                .unwrap();
            assert_eq!(lef.satisfied, predict_from_numbers(d, c, n).c_hat_v >= 0, "({d}, {c}, {n})");
        }
    }

    #[test]
    fn hessian_degree_and_bezout_closure_on_fixtures() {
        for fx in curve_fixtures() {
            let f = fx.curve().unwrap();
            let d = f.degree() as i64;
            if d >= 3 {
                assert_eq!(hessian(&f).unwrap().degree() as i64, 3 * (d - 2), "{}", fx.name);
            }
            if d < 3 {
                continue;
            }
            let locus = singular_points(&f, &cfg()).unwrap();
            let locals: Vec<_> =
                locus.points.iter().map(|p| (p.clone(), local_report(&f, &p.point, &cfg()).unwrap())).collect();
            let h = hessian_audit(&f, &locals, None).unwrap();
            let used: i64 = h.per_point.iter().map(|p| p.orbit_size as i64 * p.intersection as i64).sum();
            assert_eq!(used + h.inflection_tally, 3 * d * (d - 2), "{}", fx.name);
            for p in &h.per_point {
                if let Some(e) = p.expected {
                    assert_eq!(p.intersection, e, "{}", fx.name);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn bezout_closure_on_planted_quartics(seed in any::<u64>(), idx in 0usize..3) {
            let t = germ_type(QUARTIC_PLANTABLE[idx]);
            let f = planted_quartic(&mut ChaCha8Rng::seed_from_u64(seed), &t);
            let Ok(locus) = singular_points(&f, &cfg()) else { return Ok(()) };
            prop_assume!(locus.unresolved.is_empty());
            let locals: Vec<_> =
                locus.points.iter().map(|p| (p.clone(), local_report(&f, &p.point, &cfg()).unwrap())).collect();
            if let Ok(h) = hessian_audit(&f, &locals, None) {
                prop_assert_eq!(h.hessian_degree, 6);
                let used: i64 = h.per_point.iter().map(|p| p.orbit_size as i64 * p.intersection as i64).sum();
                prop_assert_eq!(used + h.inflection_tally, 24);
                for p in &h.per_point {
                    if let Some(e) = p.expected {
                        prop_assert_eq!(p.intersection, e);
                    }
                }
            }
        }
    }
}

mod census {
    use super::*;

    #[test]
    fn realized_curves_are_admissible() {
        for fx in curve_fixtures() {
            let f = fx.curve().unwrap();
            let gi = global_invariants(&f, true, &cfg()).unwrap();
            let dp = predict_dual(&gi).unwrap().values();
            assert!(dp.c_hat_v >= 0 && dp.n_hat_v >= 0, "{}", fx.name);
            let classes = plucker::plucker::singular_classes(&f, &cfg()).unwrap();
            if classes.iter().all(|c| c == "node" || c == "cusp") {
                let r = check_triple(gi.d, gi.c_v, gi.n_v).unwrap();
                assert_eq!(r.verdict, Verdict::Admissible, "{}: {:?}", fx.name, r.violated);
            }
        }
    }

    #[test]
    fn lefschetz_violation_is_monotone_in_cusps() {
        for d in 2..=12i64 {
            let top = (d - 1) * (d - 2) / 2;
            for n in 0..=top {
                let mut seen = false;
                for c in 0..=top - n {
                    let r = check_triple(d, c, n).unwrap();
                    let v = r.violates("lefschetz-even") || r.violates("lefschetz-odd");
                    assert!(!seen || v, "({d}, {c}, {n})");
                    seen |= v;
                }
            }
        }
    }

    #[test]
    fn verdict_matches_violation_list() {
        for d in 2..=9i64 {
            let top = (d - 1) * (d - 2) / 2;
            for c in 0..=top {
                for n in 0..=top - c {
                    let r = check_triple(d, c, n).unwrap();
                    assert_eq!(r.verdict == Verdict::RuledOut, !r.violated.is_empty());
                    assert_eq!(
                        r.violates("c_hat_v>=0"),
                        r.violates("lefschetz-even") || r.violates("lefschetz-odd"),
                        "({d}, {c}, {n})"
                    );
                }
            }
        }
    }
}

mod reports {
    use super::*;

    #[test]
    fn fixture_reports_are_deterministic_and_round_trip() {
        let opts = AnalysisOptions { hessian: true, ..Default::default() };
        for fx in curve_fixtures() {
            let f = fx.curve().unwrap();
            let a = analyze(&f, &opts).unwrap().to_json();
            let b = analyze(&f, &opts).unwrap().to_json();
            assert_eq!(a, b, "{}", fx.name);
            let back = plucker::report::AnalysisReport::from_json(&a).unwrap();
            assert_eq!(back.to_json(), a, "{}", fx.name);
        }
    }

    #[test]
    fn sidecars_match_fresh_analysis() {
        for fx in fixtures::all() {
            assert!(fx.validate(&cfg()).unwrap(), "{}", fx.name);
        }
    }
}

mod oracle {
    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn ordinary_m_fold_delta(m in 2usize..=5, slopes in prop::collection::btree_set(-6i64..=6, 5)) {
            // m distinct lines y = s x through the origin
            let mut p = MPoly::one(2);
            for s in slopes.iter().take(m) {
                p = p.mul(&MPoly::var(2, 1).sub(&MPoly::var(2, 0).scale(&rat(*s))));
            }
            let (delta, tree) = blowup_delta(&LocalPoly::from_rational(&p), &cfg()).unwrap();
            prop_assert_eq!(delta as usize, m * (m - 1) / 2);
            prop_assert_eq!(tree.multiplicity_sequence()[0].0 as usize, m);
        }

        #[test]
        fn multiplicity_sequence_is_coordinate_free(m in invertible2(), idx in 0usize..12) {
            let fx = germ_fixtures().nth(idx).unwrap();
            let p = fx.germ().unwrap().as_rational().unwrap();
            let (d1, t1) = blowup_delta(&LocalPoly::from_rational(&p), &cfg()).unwrap();
            let (d2, t2) = blowup_delta(&LocalPoly::from_rational(&linear_change2(&p, &m)), &cfg()).unwrap();
            prop_assert_eq!(d1, d2);
            prop_assert_eq!(t1.multiplicity_sequence(), t2.multiplicity_sequence(), "{}", fx.name);
        }
    }

    #[test]
    fn milnor_route_matches_blowup_route() {
        let extra = ["(y^2 - x^3)*(x^2 - y^3)", "(y^2 - x^3)*(y^2 - 2*x^3)"];
        let germs = germ_fixtures()
            .map(|f| f.germ().unwrap())
            .chain(extra.iter().map(|s| LocalPoly::parse(s).unwrap()));
        for g in germs {
            let l = analyze_germ(&g, &cfg()).unwrap();
            let (delta_blowup, _) = blowup_delta(&g, &cfg()).unwrap();
            assert_eq!(l.mu as i64, 2 * delta_blowup as i64 - l.r as i64 + 1, "{g}");
        }
    }
}
