use std::fs;
use std::process::{Command, Output};

use antiatom_core::NumericalSemigroup;
use serde_json::Value;
use tempfile::tempdir;

fn antiatom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antiatom"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = antiatom(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn scan_counts() {
    let f16 = json(&["scan", "--frobenius", "16"]);
    assert_eq!(f16["total"], 784);
    assert_eq!(f16["non_minimal"], Value::Array(vec![]));
    assert_eq!(f16["buckets"].as_array().unwrap().len(), 16);

    let g11 = json(&["scan", "--genus", "11"]);
    assert_eq!(g11["total"], 820);
    assert_eq!(g11["non_minimal"], Value::Array(vec![]));

    let g12 = json(&["scan", "--genus", "12", "--only", "12"]);
    assert_eq!(g12["total"], 592);
    let failing = g12["non_minimal"].as_array().unwrap();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["generators"], serde_json::json!([9, 10, 11, 12, 13]));
}

#[test]
fn scan_text_table() {
    let out = antiatom(&["scan", "--genus", "12", "--only", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("total 592, non-minimal 1"), "{text}");
    assert!(text.lines().any(|l| l == "<9,10,11,12,13>"));
}

#[test]
fn scan_against_expected_file() {
    let dir = tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, "# genus 12\n<9,10,11,12,13>\n").unwrap();
    let out = antiatom(&["scan", "--genus", "12", "--only", "12", "--expected", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "").unwrap();
    let out = antiatom(&["scan", "--genus", "12", "--only", "12", "--expected", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("<9,10,11,12,13>"));

    let garbage = dir.path().join("garbage.txt");
    fs::write(&garbage, "<2,4>\n").unwrap();
    let out = antiatom(&["scan", "--genus", "3", "--expected", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_interval_semigroup() {
    let report = json(&["analyze", "--gens", "9,10,11,12,13"]);
    assert_eq!(report["pa"], 6);
    assert_eq!(report["min_size"], 31);
    assert_eq!(report["base_size"], 32);
    assert_eq!(report["lambda_minimal"], false);
    assert_eq!(report["sizes"], serde_json::json!([31, 31, 32, 32, 38, 38]));
    assert_eq!(report["void"], serde_json::json!([1, 2, 3, 14, 15, 16]));
    assert_eq!(report["witness_ideal"], serde_json::json!([1, 14, 16]));
    assert_eq!(report["witness_partition"]["parts"], serde_json::json!([9, 8, 2, 2, 2, 2, 2, 2, 2]));
}

#[test]
fn analyze_smallest_semigroup() {
    let report = json(&["analyze", "--gaps", "1"]);
    assert_eq!(report["symmetric"], true);
    assert_eq!(report["pa"], 1);
    let text = stdout(&antiatom(&["analyze", "--gaps", "1"]));
    assert!(text.contains("symmetric      yes"), "{text}");
}

#[test]
fn analyze_partition_reports_its_atom_monoid() {
    let report = json(&["analyze", "--partition", "9,8,2,2,2,2,2,2,2"]);
    assert_eq!(report["partition_size"], 31);
    assert_eq!(report["hook_set"], serde_json::json!([1, 2, 3, 4, 5, 6, 7, 8, 14, 15, 16, 17]));
    assert_eq!(report["atom_monoid"]["semigroup"]["generators"], serde_json::json!([9, 10, 11, 12, 13]));
}

#[test]
fn analyze_semigroup_and_its_partition_agree() {
    for gens in ["3,5,7", "4,6,9,11", "9,10,11,12,13", "5,7,11"] {
        let direct = json(&["analyze", "--gens", gens]);
        let render = json(&["render", "--gens", gens]);
        let parts: Vec<String> = render["partition"]["parts"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let via = json(&["analyze", "--partition", &parts.join(",")]);
        assert_eq!(via["atom_monoid"]["pa"], direct["pa"], "{gens}");
        assert_eq!(via["atom_monoid"]["sizes"], direct["sizes"], "{gens}");
        assert_eq!(via["is_semigroup"], true);
    }
}

#[test]
fn cross_check_flag() {
    let plain = json(&["analyze", "--gens", "6,7,8,9,10,11"]);
    let checked = json(&["analyze", "--gens", "6,7,8,9,10,11", "--cross-check"]);
    assert_eq!(checked["frobenius"], 5);
    assert_eq!(checked["void"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(checked, plain);
}

#[test]
fn json_round_trips_through_constructors() {
    let listed = json(&["enumerate", "--frobenius", "9", "--only", "9"]);
    let listed = listed.as_array().unwrap();
    assert_eq!(listed.len(), 21);
    for item in listed {
        let s: NumericalSemigroup = serde_json::from_value(item.clone()).unwrap();
        let gaps: Vec<u32> = serde_json::from_value(item["gaps"].clone()).unwrap();
        let gens: Vec<u32> = serde_json::from_value(item["generators"].clone()).unwrap();
        assert_eq!(NumericalSemigroup::from_gaps(gaps).unwrap(), s);
        assert_eq!(NumericalSemigroup::from_generators(gens).unwrap(), s);
    }
}

#[test]
fn enumerate_filters() {
    let out = antiatom(&["enumerate", "--genus", "6", "--filter", "depth=2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout(&out);
    assert!(lines.lines().count() > 0);
    for line in lines.lines() {
        let s: NumericalSemigroup = line.split_whitespace().next().unwrap().parse().unwrap();
        assert_eq!(s.depth(), 2);
        assert!((1..=6).contains(&s.genus()));
    }
    let only = stdout(&antiatom(&["enumerate", "--genus", "6", "--only", "4"]));
    assert_eq!(only.lines().count(), 7);
    assert_eq!(antiatom(&["enumerate", "--genus", "4", "--filter", "depth"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = antiatom(&["enumerate", "--genus", "10"]);
    let b = antiatom(&["enumerate", "--genus", "10", "--threads", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204);
}

#[test]
fn render_figure_one() {
    let out = antiatom(&["render", "--set", "{0,5,7,9,->}", "--hooks"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert_eq!(text.lines().next(), Some("8 3 1"));

    let plain = stdout(&antiatom(&["render", "--set", "{0,5,7,9,->}"]));
    assert_eq!(plain, "###\n##\n#\n#\n#\n#\n");
    let conjugate = stdout(&antiatom(&["render", "--partition", "6,2,1"]));
    assert_eq!(conjugate, "######\n##\n#\n");

    let walk = stdout(&antiatom(&["render", "--set", "{0,5,7,9,->}", "--walk"]));
    assert_eq!(walk.lines().next(), Some("RUUUURURU"));
}

#[test]
fn render_empty_partition() {
    let out = antiatom(&["render", "--partition", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn family_tables() {
    let out = antiatom(&["family", "interval-m", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("interval_m(9)"));
    let report = json(&["family", "interval-k", "4", "2"]);
    assert_eq!(report["ok"], true);
    assert_eq!(report["instance"]["predicted"]["witness_size"], 31);
    let report = json(&["family", "staircase", "2", "3", "1"]);
    assert_eq!(report["instance"]["predicted"]["frobenius"], 7);
    assert_eq!(antiatom(&["family", "interval-m", "8"]).status.code(), Some(2));
    assert_eq!(antiatom(&["family", "interval-k", "6", "4"]).status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(antiatom(&["analyze", "--gaps", "2"]).status.code(), Some(2));
    assert_eq!(antiatom(&["analyze", "--gens", "4,6"]).status.code(), Some(2));
    assert_eq!(antiatom(&["analyze", "--gens", "x"]).status.code(), Some(2));
    assert_eq!(antiatom(&["analyze", "--partition", "1,2"]).status.code(), Some(2));
    assert_eq!(antiatom(&["analyze"]).status.code(), Some(2));
    assert_eq!(antiatom(&["analyze", "--gens", "2,3", "--gaps", "1"]).status.code(), Some(2));
    assert_eq!(antiatom(&["scan", "--genus", "40"]).status.code(), Some(3));
    assert_eq!(antiatom(&["enumerate", "--frobenius", "60"]).status.code(), Some(3));
    assert_eq!(antiatom(&["scan", "--genus", "3", "--only", "4"]).status.code(), Some(2));
    assert_eq!(antiatom(&["scan", "--genus", "0"]).status.code(), Some(2));
    assert_eq!(antiatom(&["scan", "--genus", "3", "--threads", "0"]).status.code(), Some(2));
}
