//! End-to-end checks of the `selsub` binary: generate, reduce, solve,
//! validate, and inspect blocks through the real command-line interface.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn selsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selsub"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn workdir(label: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("selsub-cli-{label}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_solve_validate_round_trip() {
    let dir = workdir("roundtrip");
    let inst = dir.join("inst.json");
    let out = selsub(&[
        "gen", "udg", "--n", "12", "--colors", "3", "--seed", "7", "-o",
        inst.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let solved = selsub(&["solve", inst.to_str().unwrap(), "--method", "exact"]);
    assert!(solved.status.success());
    let stdout = String::from_utf8(solved.stdout).unwrap();
    let set_line = stdout
        .lines()
        .find(|l| l.starts_with("set "))
        .expect("solver prints the chosen set");
    let set = set_line.trim_start_matches("set ").trim();

    let valid = selsub(&["validate", inst.to_str().unwrap(), "--set", set]);
    assert!(valid.status.success());
    assert!(String::from_utf8(valid.stdout).unwrap().contains("valid"));

    // the empty set fails validation with a witness and a nonzero exit
    let invalid = selsub(&["validate", inst.to_str().unwrap(), "--set", ""]);
    assert!(!invalid.status.success());
    assert!(String::from_utf8(invalid.stdout).unwrap().contains("invalid"));

    let blocks = selsub(&["blocks", inst.to_str().unwrap()]);
    assert!(blocks.status.success());
    assert!(String::from_utf8(blocks.stdout).unwrap().contains("block 0"));
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn ptas_solve_with_trace() {
    let dir = workdir("trace");
    let inst = dir.join("inst.json");
    assert!(selsub(&[
        "gen", "udg", "--n", "14", "--colors", "2", "--seed", "3", "-o",
        inst.to_str().unwrap(),
    ])
    .status
    .success());
    let trace = dir.join("trace.json");
    let out = selsub(&[
        "solve",
        inst.to_str().unwrap(),
        "--method",
        "ptas",
        "--epsilon",
        "0.5",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&trace).unwrap()).unwrap();
    assert!(parsed["records"].is_array());
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn reduce_chords_to_selective_subset() {
    let dir = workdir("reduce");
    let inst = dir.join("chords.json");
    assert!(selsub(&[
        "gen", "chords", "--n", "8", "--seed", "5", "-o",
        inst.to_str().unwrap(),
    ])
    .status
    .success());
    let reduced = dir.join("reduced.json");
    let out = selsub(&[
        "reduce",
        "circle2mss",
        inst.to_str().unwrap(),
        "-o",
        reduced.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&reduced).unwrap()).unwrap();
    assert_eq!(parsed["n"], 16);
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn threads_flag_is_accepted() {
    let dir = workdir("threads");
    let inst = dir.join("inst.json");
    assert!(selsub(&[
        "--threads", "2", "gen", "udg", "--n", "10", "--colors", "2", "--seed", "1", "-o",
        inst.to_str().unwrap(),
    ])
    .status
    .success());
    let out = selsub(&["--threads", "2", "solve", inst.to_str().unwrap()]);
    assert!(out.status.success());
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn missing_file_reports_error() {
    let out = selsub(&["solve", "/nonexistent/instance.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
