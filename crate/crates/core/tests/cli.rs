use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid-schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn class_text_and_beta() {
    let o = bin(&["class", "--uniform", "2,5", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3 s[2] + 1 s[1,1]\n");
    let o = bin(&["beta", "--minimal", "3,7"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn unsupported_file_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pan_2_3_6.json");
    let o = bin(&[
        "export",
        "--panhandle",
        "2,3,6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = bin(&["class", "--matroid", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("UnsupportedMatroid"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn json_class_feeds_product() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let o = bin(&["class", "--uniform", "2,5", "--format", "json"]);
    fs::write(&a, &o.stdout).unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([2]));
    assert_eq!(v["terms"][0]["coeff"], "3");
    assert_eq!(v["method"], serde_json::json!(["uniform"]));

    let unit = dir.path().join("unit.json");
    fs::write(
        &unit,
        r#"{"r":2,"n":5,"terms":[{"partition":[],"coeff":"1"}]}"#,
    )
    .unwrap();
    let o = bin(&[
        "product",
        a.to_str().unwrap(),
        unit.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let back: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(back["terms"], v["terms"]);

    let o = bin(&["product", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(stdout(&o), "15 s[3,1] + 10 s[2,2]\n");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "class",
        "--uniform",
        "2,4",
        "--uniform",
        "2,5",
        "--format",
        "json",
    ];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 9);
    assert_eq!(v["kappa"], 2);
}

#[test]
fn matrix_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    fs::write(
        &path,
        r#"{"rows":3,"cols":7,"entries":[[1,0,0,1,1,1,1],[0,1,0,1,1,1,1],[0,0,1,1,1,1,1]]}"#,
    )
    .unwrap();
    let o = bin(&["class", "--matrix", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "1 s[3,3]\n");
    let o = bin(&[
        "info",
        "--matrix",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_minimal"], true);
}

#[test]
fn export_round_trips_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let first = bin(&["export", "--minimal", "2,4"]);
    fs::write(&path, &first.stdout).unwrap();
    let second = bin(&["export", "--matroid", path.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bin(&["nonsense"]).status.code(), Some(2));
    assert_eq!(bin(&["class"]).status.code(), Some(2));
    assert_eq!(bin(&["class", "--uniform", "a,b"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{not json").unwrap();
    let o = bin(&["class", "--matroid", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("MalformedInput"));
    assert_eq!(
        bin(&["class", "--matroid", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"n":4,"r":2,"bases":[[1,2],[3,4]]}"#).unwrap();
    let o = bin(&["info", "--matroid", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("ExchangeAxiomViolated"));
    let o = bin(&["volume", "--uniform", "3,9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("DeskScaleExceeded"));
    let o = bin(&[
        "volume",
        "--uniform",
        "1,9",
        "--limit-n",
        "9",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
}

#[test]
fn verify_and_listing_verbs() {
    let o = bin(&["verify", "--minimal", "3,7", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    let o = bin(&["circuits", "--uniform", "2,3"]);
    assert_eq!(stdout(&o), "[1,2,3]\n");
    let o = bin(&["volume", "--uniform", "2,4"]);
    assert_eq!(
        stdout(&o),
        "dim      3\ncounts   1 6 19 44\nehrhart  1 7/3 2 2/3\nvolume   4\n"
    );
    let o = bin(&["info", "--schubert", "2,4:5"]);
    assert!(stdout(&o).contains("bases"));
}
