//! The `plucker` binary: output shape and exit codes.

use std::process::{Command, Output};

fn plucker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plucker"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn analyze_cuspidal_cubic_as_text() {
    let o = plucker(&["analyze", "y^2*z - x^3", "--hessian"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("d=3 c_v=1 n_v=0 delta=1 g=0"), "{s}");
    assert!(s.contains("d_hat=3 c_hat_v=1 n_hat_v=0"), "{s}");
    assert!(s.contains("(C.H)_p = 8  expected 8"), "{s}");
    assert!(s.contains("status           ok"), "{s}");
}

#[test]
fn analyze_fixture_by_name_as_json() {
    let o = plucker(&["analyze", "tricuspidal-quartic", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["global"]["c_v"], 3);
    assert_eq!(v["dual"]["d_hat"], 3);
    assert_eq!(v["status"], "ok");
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["analyze", "node-two-cusps-quartic", "--json", "--hessian"];
    assert_eq!(plucker(&args).stdout, plucker(&args).stdout);
}

#[test]
fn parse_errors_and_repeated_components_exit_2() {
    let o = plucker(&["analyze", "x^2 +"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));
    assert_eq!(code(&plucker(&["analyze", "(x + y)^2*z"])), 2);
    assert_eq!(code(&plucker(&["analyze", "x^2 + y*z^2"])), 2);
    assert_eq!(code(&plucker(&["check", "1", "0", "0"])), 2);
    assert_eq!(code(&plucker(&["fixtures", "show", "nope"])), 2);
    assert_eq!(code(&plucker(&["frobnicate"])), 2);
}

#[test]
fn contradictory_irreducibility_claim_is_a_finding() {
    let o = plucker(&["analyze", "x*y*z", "--assume-irreducible"]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
}

#[test]
fn orbits_beyond_the_extension_bound_exit_3() {
    let o = plucker(&[
        "analyze",
        "y*(x^2 + y^2 + z^2)",
        "--extension-bound",
        "1",
        "--json",
    ]);
    assert_eq!(code(&o), 3);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "unresolved");
    assert_eq!(v["unresolved"][0], "t^2 + 1");
    let o = plucker(&["analyze", "y*(x^2 + y^2 + z^2)"]);
    assert_ne!(code(&o), 3);
}

#[test]
fn check_reports_verdicts_through_exit_codes() {
    let o = plucker(&["check", "6", "9", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict: admissible"));
    let o = plucker(&["check", "6", "10", "0", "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "ruled_out");
    assert!(v["note"].as_str().unwrap().contains("no curve is claimed"));
}

#[test]
fn census_of_cubics_and_csv() {
    let o = plucker(&["census", "3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("3 triples, 3 admissible, 0 ruled out"), "{s}");
    assert!(s.contains("(0, 0) (0, 1) (1, 0)"), "{s}");

    let o = plucker(&["census", "5", "--csv", "-"]);
    assert_eq!(code(&o), 0);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows = rdr.records().count();
    assert_eq!(rows, (0..=6).map(|c| 7 - c).sum::<usize>());
}

#[test]
fn fixtures_list_and_show() {
    let o = plucker(&["fixtures", "list"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    for name in ["nodal-cubic", "tacnodal-quartic", "e8", "ordinary-4-fold"] {
        assert!(s.contains(name), "{name}");
    }
    let o = plucker(&["fixtures", "show", "a2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("y^2 - x^3\n"));
}
