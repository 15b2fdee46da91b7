//! End-to-end tests of the `bloc` binary: exit codes, JSON schema
//! stability, and text/JSON agreement.

use std::process::{Command, Output};

use serde_json::Value;

fn bloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn bloc_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bloc"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json_payload(out: &Output) -> Value {
    let doc: Value = serde_json::from_str(stdout(out).trim()).expect("valid JSON");
    assert_eq!(doc["status"], "ok", "doc: {doc}");
    doc["payload"].clone()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn fake_degree_table() {
    let out = bloc(&["fake-degree", "--m", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("f_(3)(u) = 1"));
    assert!(text.contains("f_(2,1)(u) = u + u^2"));
    assert!(text.contains("f_(1,1,1)(u) = u^3"));

    let out = bloc(&["fake-degree", "--m", "2", "--sigma", "1,1", "--format", "json"]);
    let payload = json_payload(&out);
    assert_eq!(payload["rows"][0]["poly"], serde_json::json!({"1": 1}));
}

#[test]
fn fake_degree_size_mismatch_is_usage_error() {
    let out = bloc(&["fake-degree", "--m", "3", "--sigma", "4,1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bchar_local_canonical_json() {
    let out = bloc(&[
        "bchar", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma", "1,1",
        "--local", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    // byte-stable canonical document
    assert_eq!(
        stdout(&out).trim(),
        r#"{"status":"ok","payload":{"type":"A","rank":1,"m":2,"gamma":[1,1],"terms":[{"weight":[0],"poly":{"0":1,"1":1}},{"weight":[2],"poly":{"1":1}}],"truncated_at":null}}"#
    );
    // and it is deterministic across runs
    let again = bloc(&[
        "bchar", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma", "1,1",
        "--local", "--format", "json",
    ]);
    assert_eq!(stdout(&out), stdout(&again));
}

#[test]
fn bchar_m1_local_is_grade_zero_character() {
    let out = bloc(&[
        "bchar", "--type", "A", "--rank", "1", "--hw", "1", "--m", "1", "--gamma", "1",
        "--local", "--format", "json",
    ]);
    let payload = json_payload(&out);
    assert_eq!(payload["terms"][0]["poly"], serde_json::json!({"0": 1}));
    assert_eq!(payload["truncated_at"], Value::Null);
}

#[test]
fn bchar_global_requires_max_degree() {
    let out = bloc(&[
        "bchar", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma", "2",
        "--global",
    ]);
    assert_eq!(exit_code(&out), 2);
    let ok = bloc(&[
        "bchar", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma", "2",
        "--global", "--max-degree", "2", "--format", "json",
    ]);
    assert_eq!(exit_code(&ok), 0);
    let payload = json_payload(&ok);
    assert_eq!(payload["truncated_at"], 2);
    assert_eq!(
        payload["terms"][0]["poly"],
        serde_json::json!({"0": 1, "1": 2, "2": 3})
    );
}

#[test]
fn bchar_rejects_non_dominant_weight() {
    let out = bloc(&[
        "bchar", "--type", "A", "--rank", "2", "--hw", "-1,0", "--m", "2", "--gamma", "2",
        "--local",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn duality_check_passes_and_reports() {
    let out = bloc(&[
        "duality-check", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma", "2",
        "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let payload = json_payload(&out);
    assert_eq!(payload["holds"], true);
    assert_eq!(payload["shift"], 1);
    assert_eq!(payload["differences"], serde_json::json!([]));

    let bad_gamma = bloc(&[
        "duality-check", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma",
        "x",
    ]);
    assert_eq!(exit_code(&bad_gamma), 2);
}

#[test]
fn oracle_verify_passes_at_m3() {
    let out = bloc(&["oracle-verify", "--type", "A", "--rank", "1", "--hw", "1", "--m", "3"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("verdict: PASS"));

    let json = bloc(&[
        "oracle-verify", "--type", "A", "--rank", "2", "--hw", "1,0", "--m", "2", "--format",
        "json",
    ]);
    let payload = json_payload(&json);
    assert_eq!(payload["all_match"], true);
    assert_eq!(payload["coinvariant_ok"], true);
    assert_eq!(payload["dim_m_loc"], 18);
}

#[test]
fn oracle_verify_budget_and_usage_errors() {
    let out = bloc(&["oracle-verify", "--type", "A", "--rank", "1", "--hw", "1", "--m", "6"]);
    assert_eq!(exit_code(&out), 3, "default budget rejects 2^6·720");

    let out = bloc(&["oracle-verify", "--type", "A", "--rank", "0", "--hw", "1", "--m", "2"]);
    assert_eq!(exit_code(&out), 2);

    // budget override via environment
    let out = bloc_env(
        &["oracle-verify", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2"],
        &[("BLOC_ORACLE_MAX_DIM", "4")],
    );
    assert_eq!(exit_code(&out), 3);

    // non-natural rank-2 module is a usage error
    let out = bloc(&["oracle-verify", "--type", "A", "--rank", "2", "--hw", "1,1", "--m", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn kronecker_and_kostka_values() {
    let out = bloc(&["kronecker", "--tau", "2,1", "--sigma", "2,1", "--gamma", "1,1,1", "--format", "json"]);
    assert_eq!(json_payload(&out)["value"], 1);

    let text = bloc(&["kostka", "--shape", "2,1", "--content", "1,1,1"]);
    assert!(stdout(&text).contains("= 2"));
    let json = bloc(&["kostka", "--shape", "2,1", "--content", "1,1,1", "--format", "json"]);
    assert_eq!(json_payload(&json)["value"], 2, "text and JSON agree");

    let mismatch = bloc(&["kronecker", "--tau", "2,1", "--sigma", "2", "--gamma", "3"]);
    assert_eq!(exit_code(&mismatch), 2);
}

#[test]
fn char_table_json() {
    let out = bloc(&["char-table", "--m", "3", "--format", "json"]);
    let payload = json_payload(&out);
    assert_eq!(payload["labels"], serde_json::json!([[3], [2, 1], [1, 1, 1]]));
    assert_eq!(payload["class_sizes"], serde_json::json!([2, 3, 1]));
    assert_eq!(
        payload["values"],
        serde_json::json!([[1, 1, 1], [-1, 0, 2], [1, -1, 1]])
    );

    let too_big = bloc(&["char-table", "--m", "13"]);
    assert_eq!(exit_code(&too_big), 3, "table limit maps to the budget code");
}

#[test]
fn orbit_normalizes_and_lists() {
    let out = bloc(&["orbit", "--type", "A", "--rank", "2", "--weight", "-1,1", "--format", "json"]);
    let payload = json_payload(&out);
    assert_eq!(payload["dominant"], serde_json::json!([1, 0]));
    assert_eq!(
        payload["orbit"],
        serde_json::json!([[-1, 1], [0, -1], [1, 0]])
    );
}

#[test]
fn natural_char_agrees_with_bchar() {
    let a = bloc(&["natural-char", "--rank", "2", "--m", "3", "--gamma", "2,1", "--format", "json"]);
    let b = bloc(&[
        "bchar", "--type", "A", "--rank", "2", "--hw", "1,0", "--m", "3", "--gamma", "2,1",
        "--local", "--format", "json",
    ]);
    assert_eq!(json_payload(&a), json_payload(&b));
}

#[test]
fn timing_goes_to_stderr_only() {
    let out = bloc(&["fake-degree", "--m", "2", "--timing", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("timing_ms="));
    // stdout stays byte-stable JSON
    let _ = json_payload(&out);
}
