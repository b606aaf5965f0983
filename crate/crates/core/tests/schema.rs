//! Reports checked against schema/analysis-report.schema.json with a small
//! validator for the keywords the schema uses.

use plucker::algebra::ExtensionConfig;
use plucker::analysis::{analyze, AnalysisOptions};
use plucker::curve::HomogPoly;
use plucker::fixtures::{self, Kind};
use serde_json::Value;

const SCHEMA: &str = include_str!("../../../schema/analysis-report.schema.json");

fn resolve<'a>(root: &'a Value, r: &str) -> &'a Value {
    let path = r.strip_prefix('#').expect("local reference");
    root.pointer(path)
        .unwrap_or_else(|| panic!("dangling $ref {r}"))
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        "string" => v.is_string(),
        "array" => v.is_array(),
        "object" => v.is_object(),
        other => panic!("unknown type {other}"),
    }
}

fn validate(root: &Value, schema: &Value, v: &Value, at: &str, errors: &mut Vec<String>) {
    let Some(s) = schema.as_object() else {
        return;
    };
    if let Some(r) = s.get("$ref").and_then(Value::as_str) {
        validate(root, resolve(root, r), v, at, errors);
    }
    if let Some(t) = s.get("type") {
        let ok = match t {
            Value::String(t) => type_matches(t, v),
            Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
            _ => panic!("bad type keyword at {at}"),
        };
        if !ok {
            errors.push(format!("{at}: expected type {t}, got {v}"));
            return;
        }
    }
    if let Some(c) = s.get("const") {
        if c != v {
            errors.push(format!("{at}: expected {c}, got {v}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            errors.push(format!("{at}: {v} not in enum"));
        }
    }
    if let (Some(m), Some(x)) = (s.get("minimum").and_then(Value::as_f64), v.as_f64()) {
        if x < m {
            errors.push(format!("{at}: {x} below minimum {m}"));
        }
    }
    if let Some(alts) = s.get("oneOf").and_then(Value::as_array) {
        let matching = alts
            .iter()
            .filter(|a| {
                let mut e = Vec::new();
                validate(root, a, v, at, &mut e);
                e.is_empty()
            })
            .count();
        if matching != 1 {
            errors.push(format!("{at}: {matching} oneOf branches match"));
        }
    }
    if let Some(a) = v.as_array() {
        if let Some(n) = s.get("minItems").and_then(Value::as_u64) {
            if (a.len() as u64) < n {
                errors.push(format!("{at}: fewer than {n} items"));
            }
        }
        if let Some(n) = s.get("maxItems").and_then(Value::as_u64) {
            if (a.len() as u64) > n {
                errors.push(format!("{at}: more than {n} items"));
            }
        }
        if let Some(items) = s.get("items") {
            for (i, x) in a.iter().enumerate() {
                validate(root, items, x, &format!("{at}/{i}"), errors);
            }
        }
    }
    if let Some(o) = v.as_object() {
        let props = s.get("properties").and_then(Value::as_object);
        if let Some(req) = s.get("required").and_then(Value::as_array) {
            for k in req.iter().filter_map(Value::as_str) {
                if !o.contains_key(k) {
                    errors.push(format!("{at}: missing {k}"));
                }
            }
        }
        for (k, x) in o {
            match props.and_then(|p| p.get(k)) {
                Some(ps) => validate(root, ps, x, &format!("{at}/{k}"), errors),
                None => match s.get("additionalProperties") {
                    Some(Value::Bool(false)) => errors.push(format!("{at}: unexpected {k}")),
                    Some(extra @ Value::Object(_)) => {
                        validate(root, extra, x, &format!("{at}/{k}"), errors)
                    }
                    _ => {}
                },
            }
        }
    }
}

fn schema() -> Value {
    serde_json::from_str(SCHEMA).unwrap()
}

fn errors_for(v: &Value) -> Vec<String> {
    let root = schema();
    let mut errors = Vec::new();
    validate(&root, &root, v, "", &mut errors);
    errors
}

fn full_options() -> AnalysisOptions {
    AnalysisOptions {
        assume_irreducible: true,
        extension: ExtensionConfig::default(),
        hessian: true,
        dual: true,
        oracles: true,
    }
}

#[test]
fn every_reference_resolves() {
    fn walk(root: &Value, v: &Value) {
        match v {
            Value::Object(o) => {
                if let Some(r) = o.get("$ref").and_then(Value::as_str) {
                    resolve(root, r);
                }
                o.values().for_each(|x| walk(root, x));
            }
            Value::Array(a) => a.iter().for_each(|x| walk(root, x)),
            _ => {}
        }
    }
    let root = schema();
    walk(&root, &root);
}

#[test]
fn fixture_reports_with_every_section_validate() {
    for fx in fixtures::all().iter().filter(|f| f.kind == Kind::Curve) {
        let report = analyze(&fx.curve().unwrap(), &full_options()).unwrap();
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        let errors = errors_for(&v);
        assert!(errors.is_empty(), "{}: {errors:#?}", fx.name);
    }
}

#[test]
fn default_and_unresolved_reports_validate() {
    let cases = [
        ("y*(x^2 + y^2 + z^2)", 1),
        ("x*y*z", 16),
        ("x^4 + y^4 + z^4", 16),
    ];
    for (s, bound) in cases {
        let opts = AnalysisOptions {
            extension: ExtensionConfig {
                bound,
                ..ExtensionConfig::default()
            },
            ..AnalysisOptions::default()
        };
        let report = analyze(&HomogPoly::parse(s).unwrap(), &opts).unwrap();
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        let errors = errors_for(&v);
        assert!(errors.is_empty(), "{s}: {errors:#?}");
    }
}

#[test]
fn validator_rejects_broken_reports() {
    let report = analyze(
        &HomogPoly::parse("y^2*z - x^3").unwrap(),
        &full_options(),
    )
    .unwrap();
    let good: Value = serde_json::from_str(&report.to_json()).unwrap();
    assert!(errors_for(&good).is_empty());

    let mut extra = good.clone();
    extra["timings"] = Value::from(1.5);
    assert!(!errors_for(&extra).is_empty());

    let mut missing = good.clone();
    missing.as_object_mut().unwrap().remove("status");
    assert!(!errors_for(&missing).is_empty());

    let mut wrong = good.clone();
    wrong["singular_points"][0]["local"]["mu"] = Value::from("2");
    assert!(!errors_for(&wrong).is_empty());

    let mut status = good;
    status["status"] = Value::from("maybe");
    assert!(!errors_for(&status).is_empty());
}
