mod common;

use std::path::Path;
use std::process::{Command, Output};

use bipolar_soft::{decide, parse, serialize};
use common::{fixture, fixture_path, neg, pos, us};
use serde_json::Value;

fn bss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bss"))
        .args(args)
        .output()
        .expect("spawn bss")
}

fn fx(name: &str) -> String {
    fixture_path(name).to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_accepts_house_fixture() {
    let out = bss(&["validate", &fx("house_example.bss.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "ok: m=8 n=5 complete=false\n");
}

#[test]
fn validate_reports_overlap_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "overlap.json",
        r#"{"universe":["u1","u2","u3"],"pairs":[{"pos":"e1","neg":"e2"}],
            "assignments":[{"param":"e1","positive":["u1","u3"],"negative":["u2","u3"]}]}"#,
    );
    let out = bss(&["validate", &path]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("e1") && err.contains("u3"), "{err}");
    assert!(!err.contains("u1"), "{err}");
}

#[test]
fn validate_reports_parse_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", "{\"universe\": [\"u1\"],\n  \"pairs\": [\n    {\"pos\": \"e1\", }\n");
    let out = bss(&["validate", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn validate_reports_unknown_ids_and_missing_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "unknown.json",
        r#"{"universe":["u1"],"pairs":[{"pos":"e1","neg":"e2"}],
            "assignments":[{"param":"e1","positive":["u9"]}]}"#,
    );
    let out = bss(&["validate", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("u9"));

    let missing = dir.path().join("missing.json");
    let out = bss(&["validate", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn union_of_f1_and_f2() {
    let out = bss(&["op", "union", &fx("f1.bss.json"), &fx("f2.bss.json")]);
    assert_eq!(out.status.code(), Some(0));
    let set = parse(&stdout(&out)).unwrap();
    assert_eq!(pos(&set, "e1"), us(&[1, 2, 3, 4]));
    assert_eq!(neg(&set, "e1"), us(&[6]));
}

#[test]
fn intersect_and_complement() {
    let out = bss(&["op", "intersect", &fx("f1.bss.json"), &fx("f2.bss.json")]);
    let set = parse(&stdout(&out)).unwrap();
    assert_eq!(pos(&set, "e1"), us(&[1, 4]));
    assert_eq!(neg(&set, "e1"), us(&[2, 3, 5, 6, 7]));

    let out = bss(&["op", "complement", &fx("f1.bss.json")]);
    let set = parse(&stdout(&out)).unwrap();
    assert_eq!(set, fixture("f1.bss.json").complement());
}

#[test]
fn subset_and_equals_use_exit_status() {
    let out = bss(&["op", "subset", &fx("f3.bss.json"), &fx("f1.bss.json")]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "true\n"));
    let out = bss(&["op", "subset", &fx("f1.bss.json"), &fx("f3.bss.json")]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(1), "false\n"));
    let out = bss(&["op", "equals", &fx("f1.bss.json"), &fx("f1.bss.json")]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "true\n"));
}

#[test]
fn products_have_squared_parameter_count() {
    let out = bss(&["op", "and", &fx("product_f1.bss.json"), &fx("product_f2.bss.json")]);
    assert_eq!(out.status.code(), Some(0));
    let set = parse(&stdout(&out)).unwrap();
    assert_eq!(set.space().num_params(), 9);
    assert_eq!(set.space().negate("(e1,e3)").unwrap(), "(e2,e4)");

    let out = bss(&["op", "or", &fx("f1.bss.json"), &fx("f2.bss.json")]);
    let set = parse(&stdout(&out)).unwrap();
    assert_eq!(set.space().num_params(), 16);
}

#[test]
fn mismatched_spaces_are_a_usage_error() {
    let out = bss(&["op", "union", &fx("f1.bss.json"), &fx("house_example.bss.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"));
    let out = bss(&["op", "union", &fx("f1.bss.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decide_on_house() {
    let out = bss(&["decide", &fx("house_example.bss.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.split_whitespace().eq(["u1", "3", "1", "2"])));
    assert!(text.contains("max score: 2\n"));
    assert!(text.ends_with("optimal: u1\n"));
}

#[test]
fn decide_formats() {
    let out = bss(&["decide", "--format", "csv", &fx("house_example.bss.json")]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("object,c_plus,c_minus,score,optimal"));
    assert!(text.lines().any(|l| l == "u1,3,1,2,true"));
    assert!(text.lines().any(|l| l == "u5,1,3,-2,false"));

    let out = bss(&["decide", "--format", "json", &fx("house_example.bss.json")]);
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["max_score"], 2);
    assert_eq!(json["optimal"], serde_json::json!(["u1"]));
    assert_eq!(json["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn all_neutral_set_ties_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "neutral.json",
        r#"{"universe":["a","b","c"],"pairs":[{"pos":"e1","neg":"e2"},{"pos":"e3","neg":"e4"}]}"#,
    );
    let out = bss(&["decide", "--format", "json", &path]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["max_score"], 0);
    assert_eq!(json["optimal"], serde_json::json!(["a", "b", "c"]));
    assert!(json["rows"].as_array().unwrap().iter().all(|r| r["score"] == 0));
}

#[test]
fn complemented_house_selects_original_argmin() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("complement.json");
    let out = bss(&["op", "complement", &fx("house_example.bss.json"), "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let out = bss(&["decide", out_path.to_str().unwrap()]);
    assert!(stdout(&out).ends_with("optimal: u5 u6 u7\n"), "{}", stdout(&out));
    let house = fixture("house_example.bss.json");
    assert_eq!(decide(&house.complement()).optimal, us(&[5, 6, 7]));
}

#[test]
fn table_formats_and_output_file() {
    let out = bss(&["table", &fx("f1.bss.json")]);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap().split_whitespace().collect::<Vec<_>>(), ["(e1,e2)", "(e3,e4)", "(e5,e6)", "(e7,e8)"]);
    assert!(text.lines().any(|l| l.split_whitespace().eq(["u1", "(1,0)", "(0,1)", "(0,1)", "(0,0)"])));

    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("f1.csv");
    let out = bss(&["table", "--format", "csv", "-o", csv_path.to_str().unwrap(), &fx("f1.bss.json")]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv.lines().next(), Some(r#"object,"(e1,e2)","(e3,e4)","(e5,e6)","(e7,e8)""#));
    assert_eq!(csv.lines().nth(1), Some(r#"u1,"1,0","0,1","0,1","0,0""#));
}

#[test]
fn op_output_is_canonical() {
    let house = fixture("house_example.bss.json");
    let dir = tempfile::tempdir().unwrap();
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    bss(&["op", "complement", &fx("house_example.bss.json"), "-o", once.to_str().unwrap()]);
    bss(&["op", "complement", once.to_str().unwrap(), "-o", twice.to_str().unwrap()]);
    let text = std::fs::read_to_string(&twice).unwrap();
    assert_eq!(text, serialize(&house));
    assert_eq!(text, std::fs::read_to_string(fixture_path("house_example.bss.json")).unwrap());
}

#[test]
fn check_laws_default_run_passes() {
    let out = bss(&["check-laws"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["violations"], 0);
    let reports = json["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["source"]["mode"] == "exhaustive"));
    assert!(reports.iter().any(|r| r["source"]["mode"] == "random"));
}

#[test]
fn check_laws_unconditional_excluded_middle_fails() {
    let out = bss(&["check-laws", "--law", "excluded-middle-unconditional", "--seed", "7", "--instances", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &json["reports"][0];
    assert_eq!(report["holds"], false);
    assert_eq!(report["expectation"], "must-fail");
    let witness = &report["counterexample"];
    assert_eq!(witness["operands"].as_array().unwrap().len(), 1);
    assert!(witness["param"].is_string() && witness["object"].is_string());
}

#[test]
fn check_laws_exhaustive_counts() {
    let out = bss(&["check-laws", "--law", "union-idempotent", "--law", "union-commutative", "--exhaustive", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = json["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["instances_checked"], 81);
    assert_eq!(reports[1]["instances_checked"], 81 * 81);
}

#[test]
fn check_laws_rejects_bad_requests() {
    let out = bss(&["check-laws", "--law", "no-such-law"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bss(&["check-laws", "--law", "union-associative", "--exhaustive", "3", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bss(&["check-laws", "--seed", "1", "--max-objects", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_laws_text_and_list() {
    let out = bss(&["check-laws", "--format", "text", "--law", "excluded-middle-unconditional", "--exhaustive", "1", "1"]);
    let text = stdout(&out);
    assert!(text.contains("FAILS-AS-EXPECTED"), "{text}");
    assert!(text.contains("counterexample"));

    let out = bss(&["check-laws", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("demorgan-and-product")));
}
