use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ecover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecover")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generate_genus_two() {
    let out = ecover(&["generate", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(stdout.contains(r#""f1": "x^3/(9*x^2+24*x+16)""#), "{stdout}");
    let v = json(&out);
    assert_eq!(v["command"], "generate");
    assert_eq!(v["certificate"]["ramification_index"], 3);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn generate_genus_one_is_identity() {
    let v = json(&ecover(&["generate", "--genus", "1"]));
    assert_eq!(v["cover"]["f1"], "x");
    assert_eq!(v["cover"]["f2"], "1");
    assert_eq!(v["cover"]["source_rhs"], v["cover"]["target_rhs"]);
}

#[test]
fn generate_genus_three_curve() {
    let v = json(&ecover(&["generate", "--genus", "3"]));
    assert_eq!(v["cover"]["source_rhs"], "x^7+(1+25*t)*x^6+225*t*x^5+760*t*x^4+1200*t*x^3+896*t*x^2+256*t*x");
    assert_eq!(v["cover"]["degree"], 5);
}

#[test]
fn generate_text_format() {
    let out = ecover(&["generate", "--genus", "2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C_t: y^2 = x^5+(1+9*t)*x^4+33*t*x^3+40*t*x^2+16*t*x"), "{text}");
    assert!(text.contains("f^*(dx/y) = 3*x dx/y"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["generate", "--genus", "0"][..],
        &["generate", "--genus", "-3"],
        &["generate", "--genus", "70"],
        &["origami", "--genus", "0"],
        &["degenerate", "--genus", "1"],
        &["generate"],
        &["frobnicate"],
    ] {
        let out = ecover(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    // the guard can be lifted
    assert_eq!(ecover(&["generate", "--genus", "3", "--max-genus", "2"]).status.code(), Some(2));
    assert_eq!(ecover(&["origami", "--genus", "70", "--max-genus", "80"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [&["generate", "--genus", "4"][..], &["origami", "--genus", "3"], &["degenerate", "--genus", "2"]] {
        assert_eq!(ecover(args).stdout, ecover(args).stdout, "{args:?}");
    }
}

#[test]
fn generate_then_verify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for g in 1..=6 {
        let generated = ecover(&["generate", "--genus", &g.to_string()]);
        let path = write(dir.path(), &format!("g{g}.json"), std::str::from_utf8(&generated.stdout).unwrap());
        let out = ecover(&["verify", &path]);
        assert_eq!(out.status.code(), Some(0), "g = {g}: {}", String::from_utf8_lossy(&out.stderr));
        // the bare cover document verifies as well
        let bare = serde_json::to_string(&json(&generated)["cover"]).unwrap();
        let path = write(dir.path(), &format!("bare{g}.json"), &bare);
        assert_eq!(ecover(&["verify", &path]).status.code(), Some(0));
    }
}

#[test]
fn verify_rejects_doubled_f2() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = json(&ecover(&["generate", "--genus", "2"]));
    let f2 = v["cover"]["f2"].as_str().unwrap().to_string();
    v["cover"]["f2"] = Value::String(format!("2*({f2})"));
    let path = write(dir.path(), "bad.json", &v.to_string());
    let out = ecover(&["verify", &path]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let identity = &report["checks"][0];
    assert_eq!(identity["name"], "cover_identity");
    assert_eq!(identity["passed"], false);
    let witness = identity["witness"].as_str().unwrap();
    assert!(witness.starts_with("difference = ") && witness != "difference = 0", "{witness}");
}

#[test]
fn verify_parse_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = json(&ecover(&["generate", "--genus", "2"]));
    v["cover"]["source_rhs"] = Value::String("x^5+(1+9*t".into());
    let path = write(dir.path(), "malformed.json", &v.to_string());
    let out = ecover(&["verify", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("source_rhs"));

    let path = write(dir.path(), "garbage.json", "{ not json");
    assert_eq!(ecover(&["verify", &path]).status.code(), Some(2));
    assert_eq!(ecover(&["verify", "/nonexistent/cover.json"]).status.code(), Some(2));
}

#[test]
fn origami_staircases() {
    let v = json(&ecover(&["origami", "--genus", "2"]));
    assert_eq!(v["diagram"], "3; right=(2 3); up=(1 2)");
    assert_eq!(v["monodromy"], "(1 3 2)");
    assert_eq!(v["genus"], 2);
    let v1 = json(&ecover(&["origami", "--genus", "1"]));
    assert_eq!(v1["squares"], 1);
    assert_eq!(v1["genus"], 1);
    let v3 = json(&ecover(&["origami", "--genus", "3"]));
    assert_eq!(v3["squares"], 5);
    assert_eq!(v3["cycle_type"], serde_json::json!([5]));
}

#[test]
fn degenerate_coefficients() {
    let out = ecover(&["degenerate", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let c = &json(&out)["report"]["coefficients"];
    let got: Vec<&str> = ["a", "b", "c", "d", "e", "f", "g"].iter().map(|k| c[k].as_str().unwrap()).collect();
    assert_eq!(got, ["9", "33", "40", "16", "0", "0", "0"]);

    let v3 = json(&ecover(&["degenerate", "--genus", "3"]));
    let c3: Vec<&str> = ["a", "b", "c", "d", "e", "f"].iter().map(|k| v3["report"]["coefficients"][k].as_str().unwrap()).collect();
    assert_eq!(c3, ["25", "225", "760", "1200", "896", "256"]);
    assert!(v3["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    // genus 4 must agree with the explicit family
    let v4 = json(&ecover(&["degenerate", "--genus", "4"]));
    let g4 = json(&ecover(&["generate", "--genus", "4"]));
    assert_eq!(v4["cover"], g4["cover"]);
}

#[test]
fn selftest_reports_every_criterion() {
    let out = ecover(&["selftest", "--max-genus", "4"]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
    let failed: Vec<&str> =
        checks.iter().filter(|c| c["passed"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    // exit status follows the checks, whatever they are
    assert_eq!(out.status.code(), Some(if failed.is_empty() { 0 } else { 1 }));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().filter(|l| l.starts_with('[')).count(), 8);
}
