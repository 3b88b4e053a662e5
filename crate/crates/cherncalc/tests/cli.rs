//! End-to-end tests of the binary: exit codes, JSON payloads, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn cherncalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherncalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn report_nodal_cubic() {
    let out = cherncalc(&["report", "--n", "2", "y^2*z - x^2*z - x^3"]);
    let v = stdout_json(&out);
    assert_eq!(v["milnor"]["coeffs"], serde_json::json!(["0", "0", "1"]));
    assert_eq!(v["chi"], "1");
    assert_eq!(v["projective_degrees"]["degrees"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["config"]["seed"], 0);
}

#[test]
fn report_smooth_conic_and_double_line() {
    let v = stdout_json(&cherncalc(&["report", "--n", "2", "x^2+y^2+z^2"]));
    assert_eq!(v["milnor"]["coeffs"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(v["chi"], "2");
    let v = stdout_json(&cherncalc(&["report", "--n", "2", "x^2"]));
    assert_eq!(v["chi"], "2");
    assert_eq!(v["cwma"]["coeffs"], serde_json::json!(["0", "1", "2"]));
}

#[test]
fn exit_codes() {
    // parse error
    let out = cherncalc(&["report", "--n", "2", "x +"]);
    assert_eq!(out.status.code(), Some(2));
    // non-homogeneous
    let out = cherncalc(&["report", "--n", "2", "x^2 + y"]);
    assert_eq!(out.status.code(), Some(3));
    // errors carry machine-readable JSON on stderr
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["exit_code"], 3);
    // budget exceeded
    let out = cherncalc(&["--budget", "1", "report", "--n", "2", "x*y*z"]);
    assert_eq!(out.status.code(), Some(5));
    // bad config
    let out = cherncalc(&["--trials", "1", "report", "--n", "2", "x^2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn byte_identical_reruns() {
    let args = ["--seed", "7", "report", "--n", "2", "x*y*z"];
    let a = cherncalc(&args);
    let b = cherncalc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // no floating point anywhere in the output
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(!text.contains('.'), "unexpected '.' in {text}");
}

#[test]
fn normal_crossings_triangle() {
    let v = stdout_json(&cherncalc(&["nc", "--n", "2", "--components", "1:1,1:1,1:1"]));
    assert_eq!(v["cwma"]["coeffs"], serde_json::json!(["0", "0", "3"]));
    assert_eq!(v["mixed_multiplicities"], false);
}

#[test]
fn family_cone_case() {
    let v = stdout_json(&cherncalc(&[
        "family", "--n", "3", "--d", "3", "--g", "0", "--r", "1", "--m", "3",
    ]));
    assert_eq!(v["residual"], "0");
    assert_eq!(v["consistent"], true);
}

#[test]
fn gb_subcommand() {
    let v = stdout_json(&cherncalc(&["gb", "--n", "1", "x^2 + y^2", "x*y"]));
    let basis: Vec<String> = serde_json::from_value(v["basis"].clone()).unwrap();
    assert!(basis.contains(&"x1^3".to_string()), "basis: {basis:?}");
}

#[test]
fn segre_subcommand() {
    let v = stdout_json(&cherncalc(&["segre", "--n", "2", "x", "y"]));
    assert_eq!(v["segre"]["coeffs"], serde_json::json!(["0", "0", "1"]));
}

#[test]
fn nu_workflow_from_fixtures() {
    let v = stdout_json(&cherncalc(&[
        "nu",
        &fixture("cubic_discriminant_strata.json"),
        "--target",
        &fixture("cubic_discriminant_cwma.json"),
    ]));
    assert_eq!(v["resolution"], "cone-sign-law");
    assert_eq!(v["nu"]["C"], "2");
    assert_eq!(v["nu"]["G"], "1");
    assert_eq!(v["nu"]["P"], "0");
    assert_eq!(v["nu"]["T"], "1");
    assert_eq!(v["nu"]["S"], "3");
    assert_eq!(v["nu"]["X"], "1");
    assert_eq!(v["nu"]["I"], "1");
    assert_eq!(v["eu_coefficients"]["P"], "-3");
    assert_eq!(v["eu_coefficients"]["T"], "-2");
    let mults: Vec<serde_json::Value> =
        serde_json::from_value(v["multiplicities"].clone()).unwrap();
    let get = |l: &str| {
        mults
            .iter()
            .find(|m| m["label"] == l)
            .map(|m| m["multiplicity"].as_u64().unwrap())
            .unwrap()
    };
    assert_eq!((get("C"), get("G"), get("P"), get("T")), (2, 1, 3, 2));
}

#[test]
fn text_format() {
    let out = cherncalc(&["--format", "text", "report", "--n", "2", "y^2*z - x^2*z - x^3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("milnor"));
    assert!(text.contains("[P0]"), "P^k rendering present: {text}");
    assert!(text.contains("chi        1"));
}
