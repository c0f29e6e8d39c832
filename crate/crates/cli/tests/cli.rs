//! End-to-end tests of the binary: output formats, fixtures, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecc-spectra"))
        .args(args)
        .env_remove("ECC_SPECTRA_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

#[test]
fn spectrum_text_main_scope() {
    let out = run(&["spectrum", "1,2,1,2", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n = 6, k = 2"));
    assert!(text.contains("inertia (n-, n0, n+): (3, 0, 3)"));
    assert!(text.contains("theorem checks: 8/8 pass"));
}

#[test]
fn spectrum_json_parses_with_expected_fields() {
    let out = run(&["spectrum", "1,2,1,2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["n"], 6);
    assert_eq!(v["k"], 2);
    assert_eq!(v["irreducible"], false);
    assert_eq!(v["m_minus_two"], 2);
    assert_eq!(v["theorems"].as_array().unwrap().len(), 8);
    let total: u64 = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 6);
}

#[test]
fn spectrum_csv_has_header_and_row() {
    let out = run(&["spectrum", "2,1,1,3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("sequence,n,k,irreducible,"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("\"2,1,1,3\",7,2,false,"));
    assert_eq!(lines.next(), None);
}

#[test]
fn spectrum_k1_path() {
    let out = run(&["spectrum", "1,1", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("k = 1"));
    assert!(text.contains("theorem checks: 1/1 pass"));
}

#[test]
fn spectrum_out_of_scope_exits_3() {
    let out = run(&["spectrum", "1,1,1"]);
    assert_eq!(code(&out), 3);
    let out = run(&["spectrum", "1,1,1,1"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn spectrum_parse_error_exits_2() {
    let out = run(&["spectrum", "1,x"]);
    assert_eq!(code(&out), 2);
    let out = run(&["spectrum", "1,0,1,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn table1_passes_and_flags_the_corrected_value() {
    let out = run(&["table1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 11);
    assert!(text.contains("zero-trace"));
    assert!(text.contains("11 rows, PASS"));
}

#[test]
fn verify_is_deterministic() {
    let first = run(&["verify", "--trials", "30", "--seed", "7"]);
    let second = run(&["verify", "--trials", "30", "--seed", "7"]);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), stdout(&second));
    let text = stdout(&first);
    assert!(text.contains("verdict: PASS"));
    assert!(text.contains("k = 1 grid (parts up to 6): 36/36 pass"));
    assert!(text.contains("antiregular orders 3..=21: 10/10 pass"));
}

#[test]
fn verify_zero_trials_is_a_usage_error() {
    let out = run(&["verify", "--trials", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_honors_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_ecc-spectra"))
        .args(["verify", "--trials", "10", "--seed", "3"])
        .env("ECC_SPECTRA_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: PASS"));
}

#[test]
fn matrix_q2k_fixture() {
    let out = run(&["matrix", "1,2,1,2", "--which", "q2k"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,0,2,0\n0,2,2,0\n2,4,0,0\n0,0,0,2\n");
}

#[test]
fn matrix_ecc_smallest_instance() {
    let out = run(&["matrix", "1,1", "--which", "ecc"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,1\n1,0\n");
}

#[test]
fn matrix_real_output_uses_plain_decimals() {
    let out = run(&["matrix", "1,2,1,2", "--which", "r"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("2.82842712475"));
    assert!(!text.contains('e'));
}

#[test]
fn matrix_unknown_selector_exits_2() {
    let out = run(&["matrix", "1,2,1,2", "--which", "bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn matrix_quotient_kinds_require_main_scope() {
    for which in ["q2k", "qtilde", "r", "t", "s"] {
        let out = run(&["matrix", "1,1,1", "--which", which]);
        assert_eq!(code(&out), 3, "selector {which}");
    }
}

#[test]
fn matrix_distance_of_disconnected_graph_exits_3() {
    let out = run(&["matrix", "2", "--which", "dist"]);
    assert_eq!(code(&out), 3);
    let out = run(&["matrix", "2", "--which", "adj"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,0\n0,0\n");
}

#[test]
fn dot_eccentric_graph_shows_two_components() {
    let out = run(&["dot", "1,1,1,2", "--which", "eccentric"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for edge in ["v0 -- v2;", "v1 -- v2;", "v3 -- v4;"] {
        assert!(text.contains(edge), "missing {edge}");
    }
    for absent in [
        "v0 -- v1;",
        "v0 -- v3;",
        "v0 -- v4;",
        "v1 -- v3;",
        "v1 -- v4;",
        "v2 -- v3;",
        "v2 -- v4;",
    ] {
        assert!(!text.contains(absent), "unexpected {absent}");
    }
}

#[test]
fn dot_graph_labels_vertices_by_part() {
    let out = run(&["dot", "3,2,1,2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for label in ["p1_1", "p1_3", "p2_2", "p3_1", "p4_2"] {
        assert!(
            text.contains(&format!("[label=\"{label}\"]")),
            "missing {label}"
        );
    }
}
