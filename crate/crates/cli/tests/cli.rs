//! End-to-end checks of the binary: exit codes, report schema and
//! determinism, dump formats.

use std::process::{Command, Output};

fn sjord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sjord"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn classical_n2_json_passes() {
    let out = sjord(&["verify", "--suite", "classical", "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arr = reports.as_array().unwrap();
    assert!(!arr.is_empty());
    let first = &arr[0];
    assert_eq!(first["suite"], "classical");
    assert_eq!(first["n"], 2);
    let checks = first["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"
        || c["status"] == "variant-pass"));
    assert!(checks
        .iter()
        .any(|c| c["id"].as_str().unwrap().starts_with("chevalley:")));
}

#[test]
fn unsupported_rank_is_config_error() {
    let out = sjord(&["verify", "--suite", "deformed", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("between 2 and 5"));
}

#[test]
fn contraction_requires_rank_2() {
    let out = sjord(&["verify", "--suite", "contraction", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fund3_rejected_for_relation_suites() {
    let out = sjord(&["verify", "--suite", "deformed", "--n", "2", "--rep", "fund3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn max_dim_cap_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_sjord"))
        .args(["verify", "--suite", "hopf", "--n", "5"])
        .env("SJORD_MAX_DIM", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SJORD_MAX_DIM"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = sjord(&["verify", "--suite", "all", "--n", "2", "--format", "json"]);
    let b = sjord(&["verify", "--suite", "all", "--n", "2", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dump_contracted_has_stated_entries() {
    let out = sjord(&["dump", "--object", "rh-contracted", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.contains(&"1 2 h"));
    assert!(lines.contains(&"1 5 h^2"));
    assert!(lines.contains(&"9 9 -1"));
}

#[test]
fn dump_rq_has_stated_entries() {
    let out = sjord(&["dump", "--object", "rq-fund", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "9 9 -q^-2"));
    assert!(text.lines().any(|l| l == "2 4 q-q^-1"));
    // stated for n = 2 only
    let bad = sjord(&["dump", "--object", "rq-fund", "--n", "3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn commutator_table_artifact() {
    let dir = std::env::temp_dir().join(format!("sjord-test-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_sjord"))
        .args(["dump", "--object", "commutator-table", "--n", "4"])
        .args(["--out", dir.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let path = dir.join("commutator-table-n4-fund.json");
    let data = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&data).unwrap();
    assert_eq!(v["n"], 4);
    assert!(!v["pairs"].as_array().unwrap().is_empty());
    // [T, E_12] = 0 at rank 4: the bracket entry list is empty
    let pair = v["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| {
            (p["left"] == "T" && p["right"] == "E_12")
                || (p["left"] == "E_12" && p["right"] == "T")
        })
        .expect("pair present");
    assert!(pair["bracket"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_out_writes_report_json() {
    let dir = std::env::temp_dir().join(format!("sjord-report-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_sjord"))
        .args(["verify", "--suite", "contraction", "--n", "2"])
        .args(["--out", dir.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let data = std::fs::read_to_string(dir.join("report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&data).unwrap();
    assert_eq!(v[0]["suite"], "contraction");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn variants_can_be_disabled() {
    // with fallbacks off, the stated rank-3 lists contain lines that fail
    let out = sjord(&[
        "verify",
        "--suite",
        "deformed",
        "--n",
        "3",
        "--typo-variants",
        "false",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
