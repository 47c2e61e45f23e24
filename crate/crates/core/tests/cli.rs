//! The command-line binary: output formats and exit codes.

use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn langrep(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_langrep")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out) = langrep(&all);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?} printed invalid JSON ({e}): {out}"));
    (code, v)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn commands_report_json_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "4 4\n1 2\n2 3\n3 4\n4 1\n");
    let grammar = write(dir.path(), "g.cfg", "S -> 0 S 1 | eps\n");
    let unary = write(dir.path(), "u.cfg", "S -> 0 S | eps\n");
    let encoded = dir.path().join("c4.lgr");
    let encoded = encoded.to_str().unwrap();

    let (code, v) = json(&["eval", "--lang", "<0101>", "--word", "14213243"]);
    assert_eq!((code, v["edges"].as_array().unwrap().len()), (0, 4));

    assert_eq!(json(&["check", "--lang", "<0101>", "--word", "14213243", "--graph", &c4]).0, 0);
    let (code, v) = json(&["check", "--lang", "<0011>", "--word", "14213243", "--graph", &c4]);
    assert_eq!((code, v["verdict"].as_str()), (1, Some("mismatch")));

    let (code, v) = json(&["search", "--lang", "<0101>", "--graph", &c4, "--uniform", "2"]);
    assert_eq!((code, v["found"].as_bool()), (0, Some(true)));
    assert_eq!(json(&["search", "--lang", "<0101,0110>", "--graph", &c4, "--freq", "2"]).0, 1);

    let (code, v) = json(&["build", "--class", "circle", "--graph", &c4]);
    assert_eq!((code, v["recipe"].as_str()), (0, Some("circle")));
    let (code, out) = langrep(&["build", "--class", "permutation", "--graph", &c4, "--emit-cert"]);
    let cert: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((code, cert["verdict"].as_str()), (0, Some("match")));
    assert_eq!(json(&["build", "--class", "interval", "--graph", &c4]).0, 1);

    let (code, v) = json(&["decompose", "--lang", "<01,001>", "--word", "aabbc"]);
    assert_eq!((code, v["parts"].as_array().unwrap().len()), (0, 1));

    let (code, v) = json(&["decide", "--cfg", &grammar, "--property", "treewidth"]);
    assert_eq!((code, v["witness"].as_str()), (1, Some("01")));
    let (code, v) = json(&["decide", "--cfg", &unary, "--property", "degeneracy"]);
    assert_eq!((code, v["answer"].as_bool()), (0, Some(true)));

    let (code, v) = json(&["encode", "--graph", &c4, "--mode", "sparse", "-o", encoded]);
    assert_eq!((code, v["payload_bits"].as_u64()), (0, Some(48)));
    let (code, v) = json(&["decode", encoded]);
    assert_eq!((code, v["edges"].as_array().unwrap().len()), (0, 4));
    assert_eq!(json(&["adjacent", encoded, "1", "2"]), (0, serde_json::json!({"adjacent": true})));
    assert_eq!(json(&["adjacent", encoded, "1", "3"]).0, 1);

    let (code, v) = json(&["classes", "--order", "4", "--lang", "<0101,0110>", "--freq", "2"]);
    assert_eq!((code, v["graphs"].as_array().unwrap().len()), (0, 10));

    let (code, v) = json(&["selftest", "--cases", "20"]);
    assert_eq!((code, v["pass"].as_bool()), (0, Some(true)));
    let (code, v) = json(&["selftest", "--cases", "20", "--lang", "re:0*1"]);
    assert_eq!((code, v["pass"].as_bool()), (1, Some(false)));
}

#[test]
fn usage_and_format_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let junk = write(dir.path(), "junk.lgr", "not a graph");
    let (code, v) = json(&["decode", &junk]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("byte 0"));
    assert_eq!(json(&["eval", "--lang", "<01", "--word", "ab"]).0, 2);
    assert_eq!(json(&["eval", "--lang", "{01}", "--word", "ab"]).0, 2);
    assert_eq!(langrep(&["no-such-command"]).0, 2);
    assert_eq!(langrep(&["classes", "--order", "7", "--lang", "<01>"]).0, 2);
}

#[test]
fn graph_output_formats() {
    let (_, dot) = langrep(&["eval", "--lang", "copy", "--word", "121324123142", "--out", "dot"]);
    assert!(dot.contains("graph"));
    let (_, edges) = langrep(&["eval", "--lang", "copy", "--word", "121324123142"]);
    assert!(edges.starts_with("4 4\n"));
}
