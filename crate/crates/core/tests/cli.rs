//! End-to-end runs of the `rgw` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn rgw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rgw"))
        .args(args)
        .env_remove("RGW_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn hurwitz_report_shape() {
    let out = rgw(&["hurwitz", "--d", "2", "--genus", "1", "--profiles", "[]", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"]["num"].to_string(), "2");
    assert_eq!(v["value"]["den"].to_string(), "1");
    assert_eq!(v["method"], "both");
    assert_eq!(v["chi_forced"].to_string(), "0");
    assert!(v.get("elapsed_ms").is_some());
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["query", "chi_forced", "value", "method", "elapsed_ms"]);
}

#[test]
fn exit_codes() {
    assert_eq!(rgw(&["chain", "--d", "3"]).status.code(), Some(0));
    assert_eq!(rgw(&["chain"]).status.code(), Some(2));
    assert_eq!(rgw(&["--budget", "0", "chain", "--d", "2"]).status.code(), Some(2));
    assert_eq!(rgw(&["hurwitz", "--d", "2", "--profiles", "[[3]]"]).status.code(), Some(2));
    let over = rgw(&["--budget", "5", "hurwitz", "--d", "4", "--genus", "1", "--method", "both"]);
    assert_eq!(over.status.code(), Some(3));
    let v = json(&over);
    assert_eq!(v["error"], "enumeration-too-large");
    assert!(v["partial"]["query"].is_object());
}

#[test]
fn failed_check_exits_one_with_error_object() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // odd virtual dimension with a nonzero value
    std::fs::write(
        &path,
        r#"{"target":{"kind":"doublet","half_genus":1},
            "entries":[{"d":2,"chi":1,"profile":[],"num":1,"den":1}]}"#,
    )
    .unwrap();
    let out = rgw(&["series", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "inconsistent-table");
}

#[test]
fn deterministic_output_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    std::fs::create_dir(&cache).unwrap();
    let args = |out: &str| {
        vec![
            "--no-timing".to_string(),
            "--cache-dir".into(),
            cache.to_str().unwrap().into(),
            "--output".into(),
            dir.path().join(out).to_str().unwrap().into(),
            "split-check".into(),
            "--max-d".into(),
            "3".into(),
            "--half-genus".into(),
            "2".into(),
        ]
    };
    let a: Vec<String> = args("a.json");
    let b: Vec<String> = args("b.json");
    assert_eq!(rgw(&a.iter().map(String::as_str).collect::<Vec<_>>()).status.code(), Some(0));
    assert_eq!(rgw(&b.iter().map(String::as_str).collect::<Vec<_>>()).status.code(), Some(0));
    let first = std::fs::read(dir.path().join("a.json")).unwrap();
    let second = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(first, second);
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["all_agree"], true);
    assert!(std::fs::read_dir(&cache).unwrap().count() >= 1);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rgw"))
        .args(["hurwitz", "--d", "5", "--genus", "2"])
        .env("RGW_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("characters-d5.bin").exists());
}

#[test]
fn series_from_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(
        &path,
        r#"{"target":{"kind":"doublet","half_genus":1,"level":1},
            "entries":[{"d":2,"chi":0,"profile":[],"num":2,"den":1},
                       {"d":2,"chi":-2,"profile":[],"num":-1,"den":3}]}"#,
    )
    .unwrap();
    let out = rgw(&["--no-timing", "series", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let terms = v["series"][0]["terms"].as_array().unwrap();
    // χ = 0: b = 0, u = 2, t2 = −4;  χ = −2: b = 2, u = 3, t2 = −4
    assert_eq!(
        serde_json::to_string(terms).unwrap(),
        r#"[{"t2":-4,"u":2,"num":2,"den":1},{"t2":-4,"u":3,"num":-1,"den":3}]"#
    );
}

#[test]
fn csv_export_and_signs() {
    let out = rgw(&["--format", "csv", "signs", "--ell", "1", "--chain", "main"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "step,name,sign,running");
    assert_eq!(lines.len(), 4);
    assert!(lines[3].ends_with(",1,1"), "{text}");
}

#[test]
fn suite_passes() {
    let out = rgw(&["--no-timing", "suite"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 9);
    assert_eq!(v["passed"], true);
}
