use std::process::{Command, Output};

use gassner::search::{PAIR_W1, PAIR_W2};
use gassner::{LaurentMatrix, LaurentPoly};
use serde_json::Value;

fn gassner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gassner")).args(args).env_remove("GASSNER_JOBS").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = gassner(&full);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

fn matrix(v: &Value) -> LaurentMatrix {
    serde_json::from_value(v["matrix"].clone()).expect("matrix schema")
}

fn poly(terms: &[(&[i32], i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), *c))).unwrap()
}

#[test]
fn gen_two_strands_prints_the_displayed_matrix() {
    let m = matrix(&json(&["gen", "--n", "2", "--r", "1", "--s", "2"]));
    assert_eq!(m.get(0, 0), &poly(&[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], 1)]));
    assert_eq!(m.get(0, 1), &poly(&[(&[1, 0], 1), (&[2, 0], -1)]));
    assert_eq!(m.get(1, 0), &poly(&[(&[0, 0], 1), (&[0, 1], -1)]));
    assert_eq!(m.get(1, 1), &poly(&[(&[1, 0], 1)]));
}

#[test]
fn gen_inverse_times_gen_is_identity() {
    let g = matrix(&json(&["gen", "--n", "4", "--r", "1", "--s", "4"]));
    let h = matrix(&json(&["gen", "--n", "4", "--r", "1", "--s", "4", "--inverse"]));
    assert!(h.checked_mul(&g).unwrap().is_identity());
    assert!(g.checked_mul(&h).unwrap().is_identity());
}

#[test]
fn gen_rejects_bad_indices_with_exit_2() {
    assert_eq!(gassner(&["gen", "--n", "4", "--r", "4", "--s", "1"]).status.code(), Some(2));
    assert_eq!(gassner(&["gen", "--n", "4", "--r", "1", "--s", "5"]).status.code(), Some(2));
    assert_eq!(gassner(&["gen", "--n", "99", "--r", "1", "--s", "2"]).status.code(), Some(2));
}

#[test]
fn eval_word_times_inverse_is_identity() {
    let v = json(&["eval", "--n", "4", "x1 x1^-1"]);
    assert_eq!(v["is_identity"], true);
    assert!(matrix(&v).is_identity());
}

#[test]
fn eval_commutator_at_t_one_is_identity() {
    assert_eq!(json(&["eval", "--n", "4", "--at-one", "[x2,x1]"])["is_identity"], true);
    assert_eq!(json(&["eval", "--n", "4", "[x2,x1]"])["is_identity"], false);
}

#[test]
fn eval_truncations_of_the_weight_five_pair_agree() {
    let a = json(&["eval", "--n", "4", "--truncate", "5", PAIR_W1]);
    let b = json(&["eval", "--n", "4", "--truncate", "5", PAIR_W2]);
    assert_eq!(a["matrix"], b["matrix"]);
    let a6 = json(&["eval", "--n", "4", "--truncate", "6", PAIR_W1]);
    let b6 = json(&["eval", "--n", "4", "--truncate", "6", PAIR_W2]);
    assert_ne!(a6["matrix"], b6["matrix"]);
}

#[test]
fn eval_syntax_error_reports_position_and_exits_2() {
    let out = gassner(&["eval", "--n", "4", "x1 [x2,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position"));
    assert_eq!(gassner(&["eval", "--n", "4", "A(1,9)"]).status.code(), Some(2));
}

#[test]
fn pretty_output_uses_t_variables() {
    let out = gassner(&["eval", "--n", "3", "--truncate", "2", "x1"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("t1*t3") && !text.contains("u1"), "{text}");
}

#[test]
fn rank_weight_four_is_injective() {
    let v = json(&["rank", "--n", "4", "--weight", "4"]);
    assert_eq!(v["rank"], 18);
    assert_eq!(v["expected"], "18");
    assert_eq!(v["injective"], true);
}

#[test]
fn rank_weight_five_breaks_down_with_notice() {
    let v = json(&["rank", "--n", "4", "--weight", "5"]);
    assert!(v["rank"].as_u64().unwrap() < 48);
    assert_eq!(v["injective"], false);
    assert!(v["notice"].as_str().unwrap().contains("116"));
}

#[test]
fn kernel_weight_three_is_empty() {
    let v = json(&["kernel", "--n", "4", "--weight", "3"]);
    assert_eq!(v["kernel"], Value::Array(vec![]));
}

#[test]
fn kernel_weight_five_is_labelled() {
    let v = json(&["kernel", "--n", "4", "--weight", "5"]);
    let kernel = v["kernel"].as_array().unwrap();
    assert_eq!(kernel.len(), 4);
    assert!(kernel[0][0]["c"].is_string());
}

#[test]
fn verify_pair_and_sfold_pass() {
    assert_eq!(gassner(&["verify", "--suite", "section4"]).status.code(), Some(0));
    assert_eq!(gassner(&["verify", "--suite", "sfold", "--n", "4", "--weight", "5"]).status.code(), Some(0));
}

#[test]
fn verify_tables_reports_the_mismatching_rows() {
    // The weight-4 left-normed table rows disagree with the computation on a
    // handful of cells (each of those rows also violates the vanishing
    // column sums every genuine class has), so the suite exits 1.
    let out = gassner(&["--format", "json", "verify", "--suite", "tables", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &v["suites"]["tables"]["report"];
    assert_eq!(report["duplicate_reading"], "single");
    for shape in report["shapes"].as_array().unwrap() {
        let mismatched = shape["mismatched_cells"].as_u64().unwrap();
        let left4 = shape["weight"] == 4 && shape["shape"] == "left_normed";
        assert_eq!(mismatched > 0, left4, "{shape}");
    }
}

#[test]
fn search_finds_no_identities() {
    let out = gassner(&[
        "--format",
        "json",
        "search",
        "--n",
        "4",
        "--weight",
        "5",
        "--coeff-bound",
        "1",
        "--support",
        "2",
        "--budget",
        "1000",
    ]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    assert_eq!(lines[0]["kind"], "config");
    let summary = &lines.last().unwrap()["data"];
    assert_eq!(summary["identities"], 0);
    assert_eq!(summary["tested"].as_u64().unwrap() as usize, lines.len() - 2);
    for l in &lines[1..lines.len() - 1] {
        assert_eq!(l["kind"], "candidate");
        assert_eq!(l["data"]["is_identity"], false);
    }
}

#[test]
fn search_on_injective_weight_prints_notice() {
    let out = gassner(&["--format", "json", "search", "--n", "4", "--weight", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 2);
    assert!(lines[1]["data"]["notice"].is_string());
}

#[test]
fn search_with_zero_budget_is_empty() {
    let lines = json_lines(&gassner(&["--format", "json", "search", "--budget", "0"]));
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["data"]["tested"], 0);
}

#[test]
fn search_output_does_not_depend_on_jobs() {
    let args = ["--format", "json", "search", "--coeff-bound", "2", "--support", "2", "--budget", "40"];
    let one = gassner(&[&["--jobs", "1"], &args[..]].concat());
    let four = Command::new(env!("CARGO_BIN_EXE_gassner")).args(args).env("GASSNER_JOBS", "4").output().unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn zero_jobs_is_a_usage_error() {
    assert_eq!(gassner(&["--jobs", "0", "rank", "--n", "3", "--weight", "1"]).status.code(), Some(2));
}
