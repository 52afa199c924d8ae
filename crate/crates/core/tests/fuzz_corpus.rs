//! Replays the checked-in fuzz seeds through the fuzzed entry points.

use std::fs;
use std::path::PathBuf;

use blowup_core::formulas::BlowupKind;
use blowup_core::graph::{graph6, notation};
use blowup_core::harness::{render, Format, VerificationReport};
use blowup_core::oracle::parse_line;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "{}", dir.display());
    out
}

#[test]
fn graph6_seeds() {
    let decoded = seeds("graph6").iter().filter(|s| graph6::decode(s).is_ok()).count();
    assert!(decoded >= 4);
}

#[test]
fn notation_seeds() {
    for s in seeds("notation") {
        let g = notation::parse(&s).unwrap_or_else(|e| panic!("{s}: {e}"));
        assert_eq!(notation::parse(&format!("g6:{}", graph6::encode(&g))).unwrap(), g);
    }
}

#[test]
fn blowup_kind_seeds() {
    for s in seeds("blowup_kind") {
        let k = BlowupKind::parse(&s).unwrap();
        assert_eq!(k.to_string(), s);
    }
}

#[test]
fn cache_line_seeds() {
    for s in seeds("cache_line") {
        let e = parse_line(&s).unwrap();
        assert_eq!(parse_line(&serde_json::to_string(&e).unwrap()).unwrap(), e);
    }
}

#[test]
fn report_seeds() {
    for s in seeds("report") {
        let r: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(render(&r, Format::Json), s.trim_end());
    }
}
