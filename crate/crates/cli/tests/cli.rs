use std::process::{Command, Output};

use serde_json::{json, Value};

fn osvg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osvg")).args(args).env_remove("OSVG_THREADS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = osvg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_lines(args: &[&str]) -> Vec<Value> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    stdout(&full).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn validator(def: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let sub = json!({"$defs": schema["$defs"], "$ref": format!("#/$defs/{def}")});
    jsonschema::validator_for(&sub).unwrap()
}

fn assert_valid(def: &str, docs: &[Value]) {
    let v = validator(def);
    for doc in docs {
        let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{doc}: {errors:?}");
    }
}

#[test]
fn hilbert() {
    assert_eq!(stdout(&["hilbert", "--ring", "os", "--n", "3"]), "[1,6,11,6]\n");
    assert_eq!(stdout(&["hilbert", "--ring", "os", "--n", "4", "--invariant"]), "[1,2,2,2,1]\n");
    assert_eq!(stdout(&["hilbert", "--ring", "vg", "--n", "3", "--invariant"]), "[1,1,1,1]\n");
    let docs = json_lines(&["hilbert", "--ring", "os", "--n", "4", "--invariant"]);
    assert_eq!(docs, vec![json!({"ring": "OS", "n": 4, "invariant": true, "coefficients": [1, 2, 2, 2, 1]})]);
    assert_valid("hilbert", &docs);
}

#[test]
fn straighten() {
    let cases = [
        ("os", "e[1,3]e[2,3]", "e[1,2]e[2,3] − e[1,2]e[1,3]"),
        ("vg", "x[2,1]", "−x[1,2]"),
        ("os", "e[1,2]e[1,2]", "0"),
    ];
    for (ring, input, expected) in cases {
        assert_eq!(stdout(&["straighten", "--ring", ring, "--n", "3", input]).trim_end(), expected);
        let docs = json_lines(&["straighten", "--ring", ring, "--n", "3", input]);
        assert_eq!(docs[0]["normal_form"], expected);
        assert_eq!(docs[0]["input"], input);
        assert_valid("straighten", &docs);
    }
}

#[test]
fn invariant_basis() {
    let cases = [("os", "2", "1", 2), ("vg", "4", "5", 0), ("os", "5", "5", 1)];
    for (ring, n, d, dim) in cases {
        let args = ["invariant-basis", "--ring", ring, "--n", n, "--degree", d];
        let text = stdout(&args);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), format!("dim {dim}"));
        let docs = json_lines(&args);
        assert_valid("basis", &docs);
        assert_eq!(docs[0]["dim"], dim);
        let vectors: Vec<&str> = docs[0]["vectors"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        assert_eq!(lines.collect::<Vec<_>>(), vectors);
    }
}

#[test]
fn verify_all_default() {
    let out = osvg(&["verify", "--statement", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9 * 4);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
    let docs = json_lines(&["verify", "--max-n", "3"]);
    assert_eq!(docs.len(), 9 * 2);
    assert!(docs.iter().all(|d| d["pass"] == true && d["expected"] == d["actual"]));
    assert_valid("report", &docs);
}

#[test]
fn verify_single() {
    let docs = json_lines(&["verify", "--statement", "os_presentation", "--n", "6", "--threads", "2"]);
    assert_eq!(docs.len(), 1);
    assert_eq!(docs[0]["pass"], true);
    assert_eq!(docs[0]["actual"]["quotient_dims"], json!([1, 2, 2, 2, 2, 2, 1]));
}

#[test]
fn thread_variable() {
    let out = Command::new(env!("CARGO_BIN_EXE_osvg"))
        .args(["verify", "--statement", "os_hilbert", "--n", "4"])
        .env("OSVG_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "PASS os_hilbert n=4 expected=[1,2,2,2,1] actual=[1,2,2,2,1]\n");
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--statement", "nonsense"][..],
        &["verify", "--max-n", "6"],
        &["verify", "--max-n", "1"],
        &["verify", "--n", "11"],
        &["hilbert", "--ring", "xy", "--n", "3"],
        &["straighten", "--ring", "os", "--n", "3", "e[1,5]"],
        &["straighten", "--ring", "os", "--n", "3", "e[1,2"],
        &["invariant-basis", "--ring", "os", "--n", "0", "--degree", "0"],
    ] {
        assert_eq!(osvg(args).status.code(), Some(2), "{args:?}");
    }
}
