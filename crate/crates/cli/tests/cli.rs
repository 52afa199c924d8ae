use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn blowup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blowup"))
        .args(args)
        .env_remove("BLOWUP_CACHE_DIR")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = blowup(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_and_params() {
    let v = json(&["construct", "turan", "7", "3"]);
    assert_eq!(v["size"], 16);
    let v = json(&["construct", "blowup", "C4", "3"]);
    assert_eq!((v["order"].as_u64(), v["size"].as_u64()), (Some(12), Some(24)));
    let v = json(&["params", "petersen"]);
    assert_eq!(v["chromatic_number"], 3);
    assert_eq!(v["matching_number"], 5);
    assert_eq!(v["independent_covering_number"], Value::Null);
    let by_g6 = json(&["params", "g6:IheA@GUAo"]);
    assert_eq!(by_g6["canonical"], v["canonical"]);
    let raw = json(&["params", "IheA@GUAo"]);
    assert_eq!(raw["canonical"], v["canonical"]);
}

#[test]
fn decompose_and_formula() {
    let v = json(&["decompose", "K4", "--p", "5", "--blowup"]);
    assert_eq!(v["q"], 4);
    assert_eq!(v["B"][0]["graph6"], "A_");
    let direct = json(&["decompose", "P4^4", "--p", "3"]);
    let split = json(&["decompose", "P4", "--p", "3", "--blowup"]);
    assert_eq!(direct["members"], split["members"]);
    let v = json(&["formula", "ex", "path:5", "20", "3"]);
    assert_eq!(v["value"], json(&["formula", "h", "20", "3", "2"])["h"].as_u64().unwrap() + 1);
    let v = json(&["formula", "ex", "kst:2,3", "20", "3"]);
    assert_eq!(v["unresolved"], "p(2,3)");
}

#[test]
fn oracle_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = json(&["--cache-dir", d, "oracle", "ex", "7", "K3"]);
    assert_eq!(cold["value"], 12);
    let warm = json(&["--cache-dir", d, "--paranoid", "oracle", "ex", "7", "K3"]);
    assert_eq!(cold, warm);
    let nim = json(&["oracle", "nim", "5", "K3"]);
    assert_eq!(nim["value"], 10);
    let free = json(&["oracle", "free", "K2,3", "K3"]);
    assert_eq!(free["free"], true);
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("reports");
    let o = out.to_str().unwrap();
    let pass = blowup(&["verify", "chvatal-diag", "--k-max", "30", "--out", o]);
    assert_eq!(pass.status.code(), Some(0));
    let fail = blowup(&["verify", "prop-6.2", "--t", "6", "--format", "json", "--out", o]);
    assert_eq!(fail.status.code(), Some(1));
    let skip = blowup(&["verify", "cor-matching", "--n", "17"]);
    assert_eq!(skip.status.code(), Some(2));
    let empty = blowup(&["verify", "chvatal-diag", "--k-max", "1"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&empty.stdout).contains("no cells evaluated"));

    let saved = fs::read_to_string(out.join("prop-6.2.json")).unwrap();
    assert_eq!(saved.trim_end(), String::from_utf8_lossy(&fail.stdout).trim_end());
    let again = blowup(&["report", out.join("prop-6.2.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(again.status.code(), Some(1));
    assert_eq!(again.stdout, fail.stdout);
    let text = blowup(&["report", out.join("chvatal-diag.json").to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("verdict: pass"));
}

#[test]
fn bad_input() {
    let out = blowup(&["params", "K3+"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = blowup(&["verify", "thm-nope"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("chvatal-diag"));
}
