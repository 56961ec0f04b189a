use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pants(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pants")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn has_integer(v: &Value) -> bool {
    match v {
        Value::Number(x) => x.is_i64() || x.is_u64(),
        Value::Array(a) => a.iter().any(has_integer),
        Value::Object(o) => o.values().any(has_integer),
        _ => false,
    }
}

fn strip_wall_time(mut v: Value) -> Value {
    v["provenance"].as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn mf_check_dimensions() {
    let out = pants(&["mf-check", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["dimensions_by_size"], serde_json::json!(["1/1", "3/1", "3/1", "1/1"]));
    assert_eq!(r["passed"], Value::Bool(true));
    assert_eq!(r["provenance"]["config_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn hkr_negative_degree() {
    let out = pants(&["hkr", "--n", "2", "--r", "2", "--t", "-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["dimension"], "1/1");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pants(&["zonotope", "--n", "0"]).status.code(), Some(2));
    assert_eq!(pants(&["zonotope"]).status.code(), Some(2));
    assert_eq!(pants(&["rnc", "--n", "2", "--pphi", "3,-5,2,1"]).status.code(), Some(2));
    assert_eq!(pants(&["smash", "--model", "/nonexistent.json", "--group", "sum"]).status.code(), Some(2));
}

#[test]
fn reports_are_reproducible() {
    let args = ["zonotope", "--n", "3"];
    let a = strip_wall_time(report(&pants(&args)));
    let b = strip_wall_time(report(&pants(&args)));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["results"]["euler_characteristic"], b["results"]["euler_characteristic"]);
}

#[test]
fn pearl_degree_inputs() {
    let out = pants(&["pearl-degree", "--n", "2", "--k0", "1,2", "--inputs", "1", "--inputs", "2"]);
    assert_eq!(report(&out)["results"]["degree"], "1/1");
    let out = pants(&["pearl-degree", "--n", "2", "--inputs", "1", "2", "3", "4"]);
    assert_eq!(report(&out)["results"]["degree"], "2/1");
}

#[test]
fn coamoeba_and_rnc() {
    let out = pants(&["coamoeba", "--theta", "0,0.1,0.2"]);
    assert_eq!(report(&out)["results"]["region"], "outside");
    let out = pants(&["rnc", "--n", "2", "--pphi", "3,-5,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pants(&["rnc", "--n", "2", "--pphi", "4,-7,1,2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn validate_labels_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("labels.json");
    let body = r#"{"n": 2, "pearls": [
        {"k_v": 4, "labels": [[1], [2], [3], [4]], "degree": 2},
        {"k_v": 4, "labels": [[1], [2], [3], [4]], "degree": 3}
    ]}"#;
    std::fs::write(&path, body).unwrap();
    let out = pants(&["validate-labels", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let checks = report(&out)["checks"].as_array().unwrap().clone();
    assert_eq!(checks[0]["passed"], Value::Bool(true));
    assert_eq!(checks[1]["passed"], Value::Bool(false));
}

fn write_model(dir: &Path) -> String {
    let out = pants(&["minimal-model", "--n", "1", "--max-arity", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = dir.join("model.json");
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn model_file_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let model = write_model(dir.path());
    let text = std::fs::read_to_string(&model).unwrap();
    assert!(!has_integer(&serde_json::from_str(&text).unwrap()));
    let out = pants(&["opposite", "--model", &model]);
    assert_eq!(out.status.code(), Some(0));
    let out = pants(&["smash", "--model", &model, "--group", "sum"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(!has_integer(&r));
    assert_eq!(r["results"]["group_order"], "3/1");
    assert_eq!(r["results"]["dimension"], "24/1");
    assert_eq!(pants(&["smash", "--model", &model, "--group", "bogus"]).status.code(), Some(2));
}

#[test]
fn morse_reports_the_cell_inequality() {
    let one = pants(&["morse", "--n", "1"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(report(&one)["results"]["fcells_violations"], "0/1");
    // positive coordinates above 2δ have f below the mean and break the inequality from n = 2 on
    let two = pants(&["morse", "--n", "2"]);
    assert_eq!(two.status.code(), Some(1));
    let r = report(&two);
    let failed: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["fcells_inequality"]);
}
