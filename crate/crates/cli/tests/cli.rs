//! End-to-end tests of the `ydtwist` binary: regression corpus diffs,
//! determinism across thread counts, output schemas, and error codes.

use std::path::Path;
use std::process::{Command, Output};

fn ydtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydtwist"))
        .args(args)
        .env_remove("YDTWIST_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn corpus(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/corpus")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path:?}: {e}"))
}

#[test]
fn sweep_matches_frozen_corpus_byte_exactly() {
    for (args, file) in [
        (["--ell", "4", "--y", "0", "--z", "1"], "sweep_ell4_y0_z1.csv"),
        (["--ell", "4", "--y", "1", "--z", "3"], "sweep_ell4_y1_z3.csv"),
    ] {
        let mut full = vec!["sweep"];
        full.extend_from_slice(&args);
        let out = ydtwist(&full);
        assert!(out.status.success());
        assert_eq!(stdout_of(&out), corpus(file), "corpus drift for {file}");
    }
}

#[test]
fn corpus_multiset_lines_pin_the_published_dimension_sets() {
    let a = corpus("sweep_ell4_y0_z1.csv");
    assert!(a
        .trim_end()
        .ends_with("# multiset: 1^16 3^32 6^32 8^16 10^32 12^32 24^32 26^16 42^32 64^16"));
    assert_eq!(a.lines().count(), 258); // header + 256 rows + summary
    let b = corpus("sweep_ell4_y1_z3.csv");
    assert!(b
        .trim_end()
        .ends_with("# multiset: 1^16 3^32 8^16 16^96 32^96"));
    assert_eq!(b.lines().count(), 258);
}

#[test]
fn sweep_output_is_identical_across_job_counts() {
    let reference = stdout_of(&ydtwist(&["sweep", "--ell", "3", "--y", "1", "--z", "2"]));
    for jobs in ["1", "2", "4"] {
        let out = ydtwist(&[
            "sweep", "--ell", "3", "--y", "1", "--z", "2", "--jobs", jobs,
        ]);
        assert!(out.status.success());
        assert_eq!(stdout_of(&out), reference, "jobs={jobs}");
    }
    // the environment variable is an alias for --jobs
    let out = Command::new(env!("CARGO_BIN_EXE_ydtwist"))
        .args(["sweep", "--ell", "3", "--y", "1", "--z", "2"])
        .env("YDTWIST_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out), reference);
}

#[test]
fn module_json_has_schema_and_exact_coefficients() {
    let out = ydtwist(&[
        "module", "--ell", "4", "--y", "0", "--z", "1", "--g", "0,0", "--beta", "0,0",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["g"], serde_json::json!([0, 0]));
    assert_eq!(v["basis"][0][0]["coeff"][0], "1/1");
    // byte-identical across runs
    let again = ydtwist(&[
        "module", "--ell", "4", "--y", "0", "--z", "1", "--g", "0,0", "--beta", "0,0",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn module_nontrivial_pair_dimension() {
    let out = ydtwist(&[
        "module", "--ell", "2", "--y", "0", "--z", "1", "--g", "0,1", "--beta", "0,0",
        "--output", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d1,d2,b1,b2,dimension"));
    assert_eq!(lines.next(), Some("0,1,0,0,8"));
}

#[test]
fn module_command_agrees_with_a_frozen_sweep_row() {
    // last data row of the (0,1) corpus: g = (3,3), beta = (3,3), dim 42
    let out = ydtwist(&[
        "module", "--ell", "4", "--y", "0", "--z", "1", "--g", "3,3", "--beta", "3,3",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["dimension"], 42);
    let ranks: usize = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["rank"].as_u64().unwrap() as usize)
        .sum();
    assert_eq!(ranks, 42);
    assert_eq!(v["basis"].as_array().unwrap().len(), 42);

    let text = ydtwist(&[
        "module", "--ell", "4", "--y", "0", "--z", "1", "--g", "3,3", "--beta", "3,3",
        "--output", "text",
    ]);
    assert!(text.status.success());
    assert!(stdout_of(&text).contains("dimension: 42"));
}

#[test]
fn invalid_parameters_produce_structured_error() {
    let out = ydtwist(&["sweep", "--ell", "4", "--y", "1", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["error"]["code"], "invalid-params");

    let out = ydtwist(&["sweep", "--ell", "4", "--y", "0", "--z", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["error"]["code"], "invalid-params");
}

#[test]
fn twist_check_passes_for_compatible_pair() {
    let out = ydtwist(&[
        "twist-check", "--ell", "4", "--y", "0", "--z", "1", "--y2", "1", "--z2", "2",
        "--output", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["pairs_total"], 256);
    assert_eq!(v["pairs_equal"], 256);
    assert!(v["presentation"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn twist_check_reports_incompatible_distinctly() {
    let out = ydtwist(&[
        "twist-check", "--ell", "4", "--y", "0", "--z", "1", "--y2", "1", "--z2", "3",
        "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["status"], "incompatible");
    assert_eq!(v["code"], "incompatible-parameters");
}

#[test]
fn twist_check_trivial_pair_passes() {
    let out = ydtwist(&[
        "twist-check", "--ell", "3", "--y", "0", "--z", "1", "--y2", "0", "--z2", "1",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("status: pass"));
}

#[test]
fn formula_check_is_gated_on_preconditions() {
    let out = ydtwist(&["formula-check", "--ell", "4", "--y", "0", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["error"]["code"], "formula-not-applicable");

    let out = ydtwist(&[
        "formula-check", "--ell", "5", "--y", "3", "--z", "1", "--output", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["pairs_equal"], 625);
}

#[test]
fn onedim_counts_ell_squared() {
    let out = ydtwist(&["onedim", "--ell", "3", "--y", "1", "--z", "2", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["count"], 9);
    assert_eq!(v["rows"][0], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn validate_reports_orders_and_gcd_condition() {
    let out = ydtwist(&["validate", "--ell", "5", "--y", "3", "--z", "1", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["r_order"], 5);
    assert_eq!(v["s_order"], 5);
    assert_eq!(v["gcd_condition"], true);
    assert_eq!(v["algebra_dimension"], 3125);
}
