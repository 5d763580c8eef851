use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn grepunit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grepunit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn validator() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(doc: &Value) {
    let v = validator();
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn report_json_genus() {
    let o = grepunit(&["report", "-a", "3", "-b", "3", "-n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["genus"], 180);
    assert_eq!(doc["generators"], serde_json::json!([40, 43, 52, 79]));
    assert_eq!(doc["apery_sum"], 7980);
    assert_valid(&doc);
}

#[test]
fn report_oracle_agrees() {
    let closed = json(&grepunit(&["report", "-a", "3", "-b", "3", "-n", "4", "--format", "json"]));
    let oracle = json(&grepunit(&[
        "report", "-a", "3", "-b", "3", "-n", "4", "--format", "json", "--oracle",
    ]));
    assert_eq!(oracle["source"], "oracle");
    for key in ["generators", "frobenius", "genus", "pseudo_frobenius", "type", "apery_sum", "n_of_s"] {
        assert_eq!(closed[key], oracle[key], "{key}");
    }
}

#[test]
fn report_rejects_non_coprime_shift() {
    let o = grepunit(&["report", "-a", "5", "-b", "2", "-n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("= 5"), "{err}");

    let o = grepunit(&["report", "-a", "5", "-b", "2", "-n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let doc = json(&o);
    assert_eq!(doc["kind"], "error");
    assert_eq!(doc["gcd"], 5);
    assert_valid(&doc);
}

#[test]
fn report_csv_row() {
    let o = grepunit(&["report", "-a", "1", "-b", "2", "-n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    let f = headers.iter().position(|h| h == "frobenius").unwrap();
    assert_eq!(&rows[0][f], "19");
}

#[test]
fn verify_all_on_example() {
    let o = grepunit(&["verify", "-a", "3", "-b", "3", "-n", "4", "--checks", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["summary"]["match"], 10);
    assert_eq!(doc["summary"]["rows"], 10);
    assert_valid(&doc);
}

#[test]
fn verify_pf_and_two_generator_frobenius() {
    let doc = json(&grepunit(&["verify", "-a", "1", "-b", "2", "-n", "3", "--checks", "pf", "--format", "json"]));
    let row = &doc["rows"][0];
    assert_eq!(row["closed"], serde_json::json!([13, 19]));
    assert_eq!(row["oracle"], serde_json::json!([13, 19]));
    assert_eq!(row["status"], "match");

    let o = grepunit(&["verify", "-a", "5", "-b", "2", "-n", "2", "--checks", "frobenius", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a,b,n,check,closed,oracle,status\n5,2,2,frobenius,13,13,match\n");
}

#[test]
fn verify_capacity_exit() {
    let o = grepunit(&["verify", "-a", "1", "-b", "5", "-n", "5", "--checks", "frobenius", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("skipped-capacity"));
}

#[test]
fn unknown_check_is_usage_error() {
    let o = grepunit(&["verify", "-a", "1", "-b", "2", "-n", "3", "--checks", "frobenius,bogus"]);
    assert_eq!(o.status.code(), Some(64));
    let o = grepunit(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(64));
    let o = grepunit(&["sweep", "--a", "1..3", "--b", "1..3", "--n", "2..3"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn sweep_smallest_grid() {
    let o = grepunit(&["sweep", "--a", "1..1", "--b", "2..2", "--n", "2..2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["summary"]["triples"], 1);
    assert_eq!(doc["summary"]["mismatch"], 0);
    for row in doc["rows"].as_array().unwrap() {
        assert!(row["status"] == "match" || row["status"] == "not-applicable", "{row}");
    }
    assert_valid(&doc);
}

#[test]
fn sweep_records_invalid_triples() {
    let o = grepunit(&["sweep", "--a", "4..6", "--b", "2", "--n", "4", "--checks", "frobenius", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("5,2,4,frobenius,,,invalid-params"), "{out}");

    let o = grepunit(&["sweep", "--a", "4..6", "--b", "2", "--n", "4", "--checks", "frobenius", "--no-skip-invalid"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic_and_valid() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("sweep{k}.json"));
        let o = grepunit(&[
            "sweep", "--a", "1..20", "--b", "2..4", "--n", "2..4", "--checks", "frobenius,genus,pf",
            "--format", "json", "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let doc: Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert_eq!(doc["summary"]["mismatch"], 0);
    assert_valid(&doc);

    let o = grepunit(&["sweep", "--a", "1..20", "--b", "2..4", "--n", "2..4", "--format", "csv"]);
    let again = grepunit(&["sweep", "--a", "1..20", "--b", "2..4", "--n", "2..4", "--format", "csv"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn unwritable_output_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing/sub/dir/out.json");
    let o = grepunit(&[
        "sweep", "--a", "1", "--b", "2", "--n", "2", "--checks", "genus", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(4));
}
