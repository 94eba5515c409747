//! End-to-end CLI tests: golden stdout, exit codes, and file round trips.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use assert_cmd::prelude::*;
use predicates::prelude::*;

fn trilink() -> Command {
    Command::cargo_bin("trilink").unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn lk_golden() {
    trilink()
        .args(["lk", "--m", "3", "--word", "1 1"])
        .assert()
        .success()
        .stdout("{\"m\":3,\"entries\":[[0,1,0],[1,0,0],[0,0,0]]}\n");
}

#[test]
fn lk_empty_word_is_zero_matrix() {
    trilink()
        .args(["lk", "--m", "3", "--word", ""])
        .assert()
        .success()
        .stdout("{\"m\":3,\"entries\":[[0,0,0],[0,0,0],[0,0,0]]}\n");
}

#[test]
fn lk_rejects_non_pure_with_exit_3() {
    trilink()
        .args(["lk", "--m", "3", "--word", "1"])
        .assert()
        .code(3)
        .stdout("")
        .stderr(predicate::str::contains("not pure"));
}

#[test]
fn lk_rejects_bad_index_with_exit_2() {
    trilink()
        .args(["lk", "--m", "3", "--word", "3"])
        .assert()
        .code(2)
        .stdout("")
        .stderr(predicate::str::contains("out of range"));
}

#[test]
fn tlk_golden_base_pair() {
    trilink()
        .args(["tlk", "--m", "3", "--a", "1 1", "--b", "1 2 1 2 1 2"])
        .assert()
        .success()
        .stdout(
            "{\"m\":3,\"entries\":[{\"i\":1,\"j\":2,\"k\":3,\"v\":-1},{\"i\":2,\"j\":1,\"k\":3,\"v\":-1},{\"i\":3,\"j\":1,\"k\":2,\"v\":1},{\"i\":3,\"j\":2,\"k\":1,\"v\":1}]}\n",
        );
}

#[test]
fn tlk_equal_words_zero_tensor() {
    trilink()
        .args(["tlk", "--m", "3", "--a", "1 1", "--b", "1 1"])
        .assert()
        .success()
        .stdout("{\"m\":3,\"entries\":[]}\n");
}

#[test]
fn tlk_non_commuting_exits_4_with_no_stdout() {
    trilink()
        .args(["tlk", "--m", "3", "--a", "1 1", "--b", "2 2"])
        .assert()
        .code(4)
        .stdout("")
        .stderr(predicate::str::contains("do not commute"));
}

#[test]
fn oracle_agrees_on_base_case() {
    let out = trilink()
        .args(["oracle", "--m", "3", "--b", "2 2", "--n", "1"])
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["verdict"], "agree");
    assert_eq!(doc["r3_count"], 4);
    assert_eq!(doc["bound"]["lower_bound"], 4);
    assert_eq!(doc["formula_tensor"], doc["sequence_tensor"]);
}

#[test]
fn oracle_trivial_case() {
    let out = trilink()
        .args(["oracle", "--m", "4", "--b", "", "--n", "3"])
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["verdict"], "agree");
    assert_eq!(doc["r3_count"], 0);
    assert_eq!(
        doc["formula_tensor"]["entries"].as_array().unwrap().len(),
        0
    );
}

#[test]
fn oracle_negative_letters_with_audit() {
    let out = trilink()
        .args([
            "oracle",
            "--m",
            "3",
            "--b",
            "-1 -1 2 2",
            "--n",
            "1",
            "--audit",
        ])
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["verdict"], "agree");
    assert_eq!(doc["r3_count"], 8);
    assert_eq!(doc["bound"]["lower_bound"], 8);
    assert_eq!(doc["audit"], "passed");
}

#[test]
fn oracle_emit_then_verify_round_trip() {
    let path = tmp("oracle-roundtrip.jsonl");
    trilink()
        .args(["oracle", "--m", "3", "--b", "2 2", "--n", "1"])
        .arg("--emit")
        .arg(&path)
        .assert()
        .success();
    let out = trilink()
        .arg("verify")
        .arg(&path)
        .arg("--audit")
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["valid"], true);
    assert_eq!(doc["audit"], "passed");
    assert_eq!(doc["r3_count"], 4);
    assert_eq!(doc["triple_points"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_rejects_tampered_word_after_with_exit_6() {
    let path = tmp("tamper.jsonl");
    trilink()
        .args(["oracle", "--m", "3", "--b", "2 2", "--n", "1"])
        .arg("--emit")
        .arg(&path)
        .assert()
        .success();
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut rec: serde_json::Value = serde_json::from_str(&lines[2]).unwrap();
    let first = rec["word_after"][0].as_i64().unwrap();
    rec["word_after"][0] = serde_json::Value::from(-first);
    lines[2] = serde_json::to_string(&rec).unwrap();
    let tampered = tmp("tampered.jsonl");
    fs::write(&tampered, lines.join("\n")).unwrap();

    trilink()
        .arg("verify")
        .arg(&tampered)
        .assert()
        .code(6)
        .stdout("")
        .stderr(predicate::str::contains("different word"));
}

#[test]
fn verify_rejects_malformed_file_with_exit_2() {
    let path = tmp("malformed.jsonl");
    fs::write(&path, "{\"m\":3,\"start\":[1,1]}\nnot json\n").unwrap();
    trilink()
        .arg("verify")
        .arg(&path)
        .assert()
        .code(2)
        .stdout("");
}

// The four-move sequence AΔ → σ1D → σ1Δσ1 → Dσ1 → Δσ1², encoded by hand.
const HAND_SEQUENCE: &str = "\
{\"m\":3,\"start\":[1,1,1,2,1,2,1,2]}
{\"step\":1,\"kind\":\"r3\",\"pos\":3,\"params\":{},\"word_after\":[1,1,2,1,2,2,1,2]}
{\"step\":2,\"kind\":\"r3\",\"pos\":6,\"params\":{},\"word_after\":[1,1,2,1,2,1,2,1]}
{\"step\":3,\"kind\":\"r3\",\"pos\":2,\"params\":{},\"word_after\":[1,2,1,2,2,1,2,1]}
{\"step\":4,\"kind\":\"r3\",\"pos\":5,\"params\":{},\"word_after\":[1,2,1,2,1,2,1,1]}
";

#[test]
fn verify_hand_encoded_sequence_lists_four_triple_points() {
    let path = tmp("hand.jsonl");
    fs::write(&path, HAND_SEQUENCE).unwrap();
    let out = trilink()
        .arg("verify")
        .arg(&path)
        .arg("--audit")
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["valid"], true);
    let points = doc["triple_points"].as_array().unwrap();
    let got: Vec<(i64, Vec<i64>)> = points
        .iter()
        .map(|p| {
            (
                p["sign"].as_i64().unwrap(),
                p["type"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_i64().unwrap())
                    .collect(),
            )
        })
        .collect();
    assert_eq!(
        got,
        vec![
            (1, vec![3, 2, 1]),
            (-1, vec![1, 2, 3]),
            (1, vec![3, 1, 2]),
            (-1, vec![2, 1, 3]),
        ]
    );
}

#[test]
fn bound_golden() {
    let out = trilink()
        .args(["bound", "--m", "3", "--b", "1 1 2 2", "--n", "1"])
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["mu"], 2);
    assert_eq!(doc["nu"], 1);
    assert_eq!(doc["lower_bound"], 4);
    assert_eq!(doc["tlk_abs_sum"], 4);
}

#[test]
fn bound_identity_is_zero() {
    let out = trilink()
        .args(["bound", "--m", "3", "--b", "", "--n", "9"])
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["lower_bound"], 0);
}

#[test]
fn bound_wider_alternating_family() {
    let out = trilink()
        .args(["bound", "--m", "4", "--b", "-1 -1 2 2 -3 -3", "--n", "1"])
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["mu"], 3);
    assert_eq!(doc["nu"], 0);
    assert_eq!(doc["lower_bound"], 24);
}

#[test]
fn sequence_structured_family() {
    let path = tmp("structured.jsonl");
    let out = trilink()
        .args([
            "sequence", "--m", "3", "--w", "1 1", "--k1", "0", "--l1", "1", "--k2", "1", "--l2",
            "0",
        ])
        .arg("--emit")
        .arg(&path)
        .assert()
        .success();
    let stdout = String::from_utf8(out.get_output().stdout.clone()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["r3_count"], 4);
    assert_eq!(doc["start"], serde_json::json!([1, 1, 1, 2, 1, 2, 1, 2]));
    assert_eq!(doc["target"], serde_json::json!([1, 2, 1, 2, 1, 2, 1, 1]));
    trilink().arg("verify").arg(&path).assert().success();
}

#[test]
fn identical_invocations_are_byte_identical() {
    let run = || {
        let out = trilink()
            .args(["oracle", "--m", "3", "--b", "1 1 2 2", "--n", "2"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn pretty_flag_is_indented_and_equivalent() {
    let compact = trilink()
        .args(["lk", "--m", "3", "--word", "1 1"])
        .output()
        .unwrap();
    let pretty = trilink()
        .args(["lk", "--m", "3", "--word", "1 1", "--pretty"])
        .output()
        .unwrap();
    let a: serde_json::Value = serde_json::from_slice(&compact.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&pretty.stdout).unwrap();
    assert_eq!(a, b);
    assert!(String::from_utf8(pretty.stdout).unwrap().contains("\n  "));
}
