mod common;

use std::process::{Command, Output};

use common::example_path;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evidnet"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_bundled_file() {
    let o = run(&[
        "validate",
        example_path("paper_section5.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "ok: 3 nodes, 2 edges, 2 messages");
}

#[test]
fn validate_reports_diagnostic_codes() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(example_path("paper_section5.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["gamma"]
        .as_array_mut()
        .unwrap()
        .retain(|c| !(c["node"] == "Place" && c["link"] == "Family"));
    doc["nodes"][0]["mass"][0]["mass"] = serde_json::json!(0.65);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(
        out.contains("MISSING_GAMMA_CELL at gamma[Place,Family]"),
        "{out}"
    );
    assert!(out.contains("BAD_SUM at nodes[n1].mass"), "{out}");
}

#[test]
fn validate_parse_error_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ \"version\": \"1\",\n  oops }").unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_two() {
    let file = example_path("paper_section5.json");
    let file = file.to_str().unwrap();
    assert_eq!(
        run(&["fuse", file, "--target", "n9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["fuse", file, "--target", "n3", "--rule", "majority"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["fuse", file, "--target", "n3", "--gamma-strategy", "guess"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--nodes", "3", "--seed", "1", "--density", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fuse_prints_walkthrough_and_decision() {
    let o = run(&[
        "fuse",
        example_path("paper_section5.json").to_str().unwrap(),
        "--target",
        "n3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("message m1 from n1:"));
    assert!(out.contains("message m2 from n2:"));
    assert_eq!(
        out.lines().last().unwrap(),
        "decision: PNC (BetP=0.845480, conflict=0.554062)"
    );
}

#[test]
fn fuse_with_union_strategy() {
    let o = run(&[
        "fuse",
        example_path("paper_section5.json").to_str().unwrap(),
        "--target",
        "n3",
        "--gamma-strategy",
        "union",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("decision: PNC"));
}

#[test]
fn betp_from_file_accepts_conflict() {
    let o = run(&[
        "betp",
        example_path("conflicting_message.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PC\t0.462264"), "{out}");
    assert!(out.contains("PNC\t0.405660"), "{out}");
}

#[test]
fn betp_inline_errors() {
    assert_eq!(
        run(&["betp", "--frame", "a,b", "--mass", "c=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["betp", "--frame", "a,b", "--mass", "a=0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["betp", "--frame", "a,b", "--mass", "{}=1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["betp"]).status.code(), Some(2));
}

#[test]
fn gen_writes_loadable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let o = run(&[
        "gen",
        "--nodes",
        "5",
        "--seed",
        "7",
        "--density",
        "0.6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    let again = run(&["gen", "--nodes", "5", "--seed", "7", "--density", "0.6"]);
    assert_eq!(std::fs::read(&path).unwrap(), again.stdout);
}
