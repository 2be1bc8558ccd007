use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn nbracket(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbracket")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> (Value, i32) {
    let o = nbracket(args);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn strip_elapsed(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.remove("elapsed_ms");
    }
    v
}

/// Compares against `tests/golden/<name>.json`, ignoring `elapsed_ms`.
/// Set `UPDATE_GOLDEN=1` to rewrite the files.
fn golden(name: &str, args: &[&str]) {
    let (v, _) = json_of(args);
    let v = strip_elapsed(v);
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.json")].iter().collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap() + "\n").unwrap();
    }
    let expected: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v, expected, "{name}");
}

#[test]
fn golden_reports() {
    golden("verify_bremner_1", &["verify", "bremner", "1", "--format", "json"]);
    golden("verify_even_4", &["verify", "even", "4", "--format", "json"]);
    golden("verify_even_3", &["verify", "even", "3", "--format", "json"]);
    golden("verify_odd_reduce_3", &["verify", "odd-reduce", "3", "--format", "json"]);
    golden("verify_sums_10", &["verify", "sums", "10", "--format", "json"]);
    golden("verify_decomp_1", &["verify", "decomp", "1", "--format", "json"]);
    golden("reduce_bremner_lhs", &["reduce", "[[A[bcd]e]fg]", "--format", "json"]);
    golden("expand_abc", &["expand", "[ABC]", "--format", "json"]);
}

#[test]
fn report_keys_are_stable() {
    let (v, code) = json_of(&["verify", "bremner", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["identity", "params", "status", "profile", "sign_convention", "witness", "method", "words", "peak_classes", "extras", "elapsed_ms"]
    );
}

#[test]
fn expand_examples() {
    let o = nbracket(&["expand", "[ABC]"]);
    assert_eq!(stdout(&o), "ABC - ACB - BAC + BCA + CAB - CBA\n");
    let o = nbracket(&["expand", "[AD,B,C]"]);
    assert_eq!(stdout(&o), "ADBC - ADCB - BADC + BCAD + CADB - CBAD\n");
    assert_eq!(stdout(&nbracket(&["expand", "[A]"])), "A\n");
}

#[test]
fn reduce_examples() {
    let (v, _) = json_of(&["reduce", "[[Abc][def]g]", "--format", "json"]);
    assert_eq!(v["profile"], serde_json::json!([24, 36, 36, 24, 36, 36, 24]));
    let (v, _) = json_of(&["reduce", "[b1[b2 b3]]", "--format", "json"]);
    assert_eq!(v["classes"], serde_json::json!([]));
    let (v, _) = json_of(&["reduce", "[A b1 b2]", "--format", "json"]);
    let coeffs: Vec<i64> = v["classes"].as_array().unwrap().iter().map(|c| c["coeff"].as_i64().unwrap().abs()).collect();
    assert_eq!(coeffs, [2, 2, 2]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| nbracket(args).status.code().unwrap();
    assert_eq!(code(&["verify", "bremner", "1"]), 0);
    assert_eq!(code(&["verify", "even", "3"]), 1);
    assert_eq!(code(&["expand", "[A,,B]"]), 2);
    assert_eq!(code(&["reduce", "[b1 [b1 b2]]"]), 2);
    assert_eq!(code(&["expand", "[ABCDEFGHIJ]", "--budget", "1000"]), 3);
    assert_eq!(code(&["verify", "bremner", "2", "--method", "oracle", "--budget", "1000"]), 3);
    assert_eq!(code(&["verify", "bremner", "0"]), 4);
    assert_eq!(code(&["verify", "odd-reduce", "4"]), 4);
    assert_eq!(code(&["verify", "nonsense", "1"]), 4);
    assert_eq!(code(&["reduce", "[[A b1] [b2 b3] (b4 b5)]", "--method", "fast"]), 4);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn thread_counts_give_identical_json() {
    for args in [
        &["verify", "bremner", "1"][..],
        &["verify", "even", "4"],
        &["verify", "odd-reduce", "3"],
        &["verify", "decomp", "1"],
    ] {
        let run = |threads: &str| {
            let mut a = args.to_vec();
            a.extend(["--format", "json", "--threads", threads]);
            strip_elapsed(json_of(&a).0)
        };
        let one = run("1");
        assert_eq!(one, run("auto"));
        assert_eq!(one, run("3"));
    }
}

#[test]
fn record_appends_reports() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("results.ndjson");
    let log_arg = log.to_str().unwrap();
    assert!(nbracket(&["verify", "sums", "3", "--record", log_arg]).status.success());
    assert!(nbracket(&["verify", "even", "2", "--record", log_arg]).status.success());
    let entries = nbracket::record::read(&log).unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["identity"], "sums");
    assert_eq!(entries[1]["identity"], "even");
    assert_eq!(entries[1]["status"], "verified");
}

#[test]
fn latex_output() {
    let o = nbracket(&["verify", "decomp", "1", "--format", "latex"]);
    let text = stdout(&o);
    assert!(text.contains("\\frac{1}{20}~\\left[ A b_{1}"), "{text}");
    assert!(text.contains(" - \\frac{1}{6}~"), "{text}");
    let o = nbracket(&["expand", "[A b1]", "--format", "latex"]);
    assert_eq!(stdout(&o), "\\left[ A b_{1} \\right] = Ab_{1} - b_{1}A\n");
}

#[test]
fn role_overrides() {
    let (v, _) = json_of(&["reduce", "[a b c]", "--fixed", "a", "--format", "json"]);
    assert_eq!(v["profile"], serde_json::json!([2, 2, 2]));
    let (v, _) = json_of(&["reduce", "[A B]", "--anti", "B", "--format", "json"]);
    assert_eq!(v["expression"], "[A b1]");
}

#[test]
fn selfcheck_is_seeded() {
    let a = nbracket(&["selfcheck", "--cases", "10", "--max-words", "5000", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), "10 cases, 0 mismatches (seed 9)\n");
}
