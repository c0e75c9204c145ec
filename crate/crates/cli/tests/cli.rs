//! End-to-end tests of the `monozeta` binary.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monozeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn curve_golden_text_report() {
    let out = run(&["curve", "y^(3/2)+y^(7/4)+y^(11/6)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree d:        12"));
    assert!(text.contains("euler chi:       -203"));
    assert!(text
        .contains("H(t):            (t^12-1)(t^18-1)(t^39-1)(t^79-1)/((t^36-1)(t^78-1)(t^237-1))"));
}

#[test]
fn surface_golden_json_report() {
    let out = run(&[
        "surface",
        "x^(1/2)*y^(3/2)+x^(1/2)*y^(7/4)+x^(2/3)*y^(11/6)",
        "--json",
        "--trace",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["degree"], 24);
    assert_eq!(value["euler"], -874);
    assert_eq!(value["levels"].as_array().unwrap().len(), 3);
    assert_eq!(value["levels"][1]["a"], 17);
    assert_eq!(value["levels"][1]["s"], 7);
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = ["curve", "y^(3/2)+y^(7/4)+y^(11/6)", "--json", "--cyclotomic"];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);
}

#[test]
fn nonreduced_surface_reports_the_multiplier() {
    let out = run(&["surface", "x^(3/2)+x^2*y^(3/2)", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["reduction"]["N"], 2);
    assert_eq!(value["reduction"]["pairs"][0][0], "4");
    assert_eq!(value["reduction"]["pairs"][0][1], "3/2");
}

#[test]
fn exit_code_contract() {
    // 1: syntax-level failures
    assert_eq!(run(&["curve", "y^"]).status.code(), Some(1));
    assert_eq!(run(&["curve", "y^(3/2)+y^(3/2)"]).status.code(), Some(1));
    // 2: validation failures
    assert_eq!(run(&["surface", "x^(3/2)+x^(7/2)"]).status.code(), Some(2));
    assert_eq!(run(&["curve", "y^0"]).status.code(), Some(2));
    // 0: success
    assert_eq!(run(&["curve", "y^2"]).status.code(), Some(0));
}

#[test]
fn integer_exponent_curve_is_smooth() {
    let out = run(&["curve", "y^2", "--json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["degree"], 1);
    assert_eq!(value["euler"], 1);
    assert_eq!(value["horizontal"]["canonical"], "(t-1)");
    assert_eq!(value["characteristics"].as_array().unwrap().len(), 0);
}

#[test]
fn file_input_works() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "y^(3/2)+y^(7/4)+y^(11/6)").unwrap();
    let path = file.path().to_str().unwrap();
    let out = run(&["curve", "--file", path, "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["degree"], 12);
}

#[test]
fn json_input_schema_is_accepted_directly() {
    let out = run(&[
        "surface",
        r#"{"kind":"surface","pairs":[["1/2","3/2"]]}"#,
        "--json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["degree"], 2);
    assert_eq!(value["vertical"]["canonical"], "(t-1)^2/(t^3-1)");
}

#[test]
fn batch_is_order_preserving_and_error_tolerant() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"kind":"curve","exponents":["3/2","7/4","11/6"]}}"#).unwrap();
    writeln!(file, "not json").unwrap();
    writeln!(
        file,
        r#"{{"kind":"surface","pairs":[["1/2","3/2"],["1/2","7/4"],["2/3","11/6"]]}}"#
    )
    .unwrap();
    let out = run(&["batch", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    let second: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    let third: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    assert_eq!(first["degree"], 12);
    assert_eq!(second["line"], 2);
    assert!(second["error"].is_string());
    assert_eq!(third["degree"], 24);
}

#[test]
fn empty_batch_gives_empty_output() {
    let file = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["batch", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn missing_batch_file_is_an_io_error() {
    let out = run(&["batch", "/nonexistent/path.jsonl"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_truncation_point_and_skip() {
    let out = run(&["verify-truncation", "--point", "2,3,1,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("result: match"));
    assert!(text.contains("horizontal bigraph: (t^2-1)(t^3-1)/(t^6-1)"));

    let out = run(&["verify-truncation", "--point", "2,4,1,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("skipped"));
}

#[test]
fn verify_truncation_default_grid_passes() {
    let out = run(&["verify-truncation"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(": 0 mismatches"));
}

#[test]
fn axis_flag_swaps_before_processing() {
    // (0, 3/2) swapped to (3/2, 0): no transverse singularity left.
    let out = run(&["surface", "y^(3/2)", "--axis", "y"]);
    assert_eq!(out.status.code(), Some(2));

    // A symmetric support gives the same invariants on both axes.
    let a = stdout(&run(&["surface", "x^(1/2)*y^(1/2)", "--json"]));
    let b = stdout(&run(&["surface", "x^(1/2)*y^(1/2)", "--json", "--axis", "y"]));
    let va: serde_json::Value = serde_json::from_str(a.trim()).unwrap();
    let vb: serde_json::Value = serde_json::from_str(b.trim()).unwrap();
    assert_eq!(va["degree"], vb["degree"]);
    assert_eq!(va["vertical"], vb["vertical"]);
    assert_ne!(va["axis"], vb["axis"]);
}

#[test]
fn text_and_json_carry_identical_content() {
    let expr = "x^(1/2)*y^(3/2)+x^(2/3)*y^(11/6)";
    let text = stdout(&run(&["surface", expr, "--trace", "--cyclotomic"]));
    let json_out = stdout(&run(&["surface", expr, "--json", "--trace", "--cyclotomic"]));
    let value: serde_json::Value = serde_json::from_str(json_out.trim()).unwrap();
    // Every scalar the JSON reports appears in the text output.
    assert!(text.contains(&format!("degree d:        {}", value["degree"])));
    assert!(text.contains(&format!("euler chi:       {}", value["euler"])));
    assert!(text.contains(value["horizontal"]["canonical"].as_str().unwrap()));
    assert!(text.contains(value["vertical"]["canonical"].as_str().unwrap()));
    assert!(text.contains(value["horizontal_cyclotomic"]["canonical"].as_str().unwrap()));
    assert!(text.contains(value["vertical_cyclotomic"]["canonical"].as_str().unwrap()));
    assert_eq!(
        value["levels"].as_array().unwrap().len(),
        text.lines().filter(|l| l.starts_with("level ")).count()
    );
}
