use std::process::Command;

use csgoppa::codes::{make_code, SupportVariant};
use csgoppa::matrix::Matrix;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_csgoppa")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dim_reports_table_dimensions() {
    let v = json(&["dim", "--family", "gamma6", "--q", "3", "--l", "3", "--order", "3"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(701), Some(401)));
    let v = json(&["dim", "--family", "gamma1", "--q", "3", "--l", "4", "--order", "3"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(6481), Some(5216)));
    let v = json(&["dim", "--family", "c3star", "--q", "3", "--l", "2", "--order", "1"]);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(71), Some(39)));
}

#[test]
fn mindist_modes() {
    let base = ["mindist", "--family", "gamma6", "--q", "5", "--l", "1", "--order", "2"];
    let exact = json(&[&base[..], &["--mode", "exact"]].concat());
    assert_eq!(exact["d"].as_u64(), Some(13));
    assert_eq!(exact["method"], "exhaustive");
    let fast = json(&[&base[..], &["--mode", "fast", "--threads", "2"]].concat());
    assert_eq!(fast["d"].as_u64(), Some(13));
    let sampled = json(&[&base[..], &["--mode", "sample", "--samples", "200", "--seed", "7"]].concat());
    assert_eq!(sampled["method"], "sampled-upper-bound");
    assert!(sampled["d"].as_u64().unwrap() >= 13);
    let again = json(&[&base[..], &["--mode", "sample", "--samples", "200", "--seed", "7"]].concat());
    assert_eq!(sampled["d"], again["d"]);
}

#[test]
fn csv_output_has_header_and_rows() {
    let (code, out, _) = run(&["table", "--id", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("3,2,1,42,42,"));
    assert!(lines[1].ends_with(",PASS"));
    let (_, out, _) = run(&["dim", "--family", "gamma6", "--q", "3", "--l", "2", "--order", "3", "--format", "csv"]);
    assert_eq!(out, "family,q,l,order,n,k\ngamma6,3,2,3,71,16\n");
}

#[test]
fn verify_chain_exit_code_and_json() {
    let v = json(&["verify-chain", "--q", "3", "--l", "2", "--order", "2"]);
    assert_eq!(v["order"], 2);
    assert!(v["relations"].as_array().unwrap().iter().all(|r| r["verified"] == true));
    let v = json(&["verify-chain", "--q", "3", "--l", "1"]);
    assert_eq!(v["orders"].as_array().unwrap().len(), 3);
    assert_eq!(v["all_verified"], true);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["dim", "--family", "gamma9", "--q", "3", "--l", "2", "--order", "1"][..],
        &["dim", "--family", "gamma6", "--q", "4", "--l", "2", "--order", "1"],
        &["dim", "--family", "gamma6", "--q", "3", "--l", "2", "--order", "0"],
        &["dim", "--family", "gamma6", "--q", "3", "--l", "0", "--order", "1"],
        &["dim", "--family", "gamma6", "--q", "3", "--l", "2", "--order", "1", "--extra-power", "1"],
        &["table", "--id", "9"],
        &["verify-chain", "--q", "3", "--l", "2", "--order", "4"],
        &["mindist", "--family", "gamma6", "--q", "3", "--l", "2", "--order", "1", "--cap", "1000"],
        &["table"],
        &["dim", "--format", "xml", "--family", "gamma6", "--q", "3", "--l", "2", "--order", "1"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn dumps_match_the_code() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.txt");
    let s = dir.path().join("support.txt");
    let v = json(&[
        "build",
        "--family",
        "gamma5",
        "--q",
        "3",
        "--l",
        "2",
        "--order",
        "2",
        "--dump-h",
        h.to_str().unwrap(),
        "--dump-support",
        s.to_str().unwrap(),
    ]);
    let code = make_code(SupportVariant::L5, 3, 2, 2, None).unwrap();
    assert_eq!(v["k"].as_u64(), Some(code.k() as u64));
    assert_eq!(v["field"], "GF(3^4)");
    let dumped = Matrix::parse_dump(&std::fs::read_to_string(&h).unwrap()).unwrap();
    assert_eq!(dumped.to_dump(), code.h_ext().to_dump());
    let support = std::fs::read_to_string(&s).unwrap();
    assert_eq!(support, code.support().to_dump());
    assert_eq!(support.lines().count(), code.n());
}
