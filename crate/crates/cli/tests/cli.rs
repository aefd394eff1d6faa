use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypertrans"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

const TRIPLE: &str = "3 3\n0 1 2\n";
const K43: &str = "# complete 3-uniform on four vertices\n4 3\n0 1 2\n0 1 3\n\n0 2 3\n1 2 3\n";

#[test]
fn count_examples() {
    let dir = tempfile::tempdir().unwrap();
    let triple = write(dir.path(), "triple.hg", TRIPLE);
    let k43 = write(dir.path(), "k43.hg", K43);
    let t = triple.to_str().unwrap();
    let k = k43.to_str().unwrap();

    let v = json(&run(&["count", t, "--profile", "strong", "--mode", "maximal"]));
    assert_eq!(v["count"], 3);
    assert_eq!(v["n"], 3);
    assert_eq!(v["mode"], "maximal");

    assert_eq!(json(&run(&["count", k, "--profile", "0,1", "--mode", "maximal"]))["count"], 4);
    assert_eq!(json(&run(&["count", k, "--profile", "all", "--mode", "all"]))["count"], 16);

    let keys: Vec<String> = json(&run(&["count", k, "-p", "0,1"])).as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["n", "r", "profile", "mode", "count"]);
}

#[test]
fn count_reads_stdin_and_lists_witnesses() {
    let v = json(&run_stdin(&["count", "-p", "0,1", "--witnesses", "2"], TRIPLE));
    assert_eq!(v["count"], 4);
    assert_eq!(v["witnesses"], serde_json::json!([[], [0]]));
}

#[test]
fn enumerate_streams_sorted_vertex_lists() {
    let out = run_stdin(&["enumerate", "-p", "strong", "-m", "maximal"], K43);
    assert_eq!(stdout(&out), "0\n1\n2\n3\n");
    let out = run_stdin(&["enumerate", "-p", "0,1"], TRIPLE);
    assert_eq!(stdout(&out), "-\n0\n1\n2\n");
}

#[test]
fn tsv_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("count.tsv");
    let out = run_stdin(&["count", "-p", "strong", "-m", "maximal", "--tsv", "--out", target.to_str().unwrap()], K43);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(target).unwrap(), "n\tr\tprofile\tmode\tcount\n4\t3\t0,1\tmaximal\t4\n");
}

#[test]
fn bounds_examples() {
    let g8 = json(&run(&["bounds", "g", "8"]));
    assert_eq!(g8["value"], "16");
    let g5 = json(&run(&["bounds", "g", "5"]));
    assert_eq!(g5["value"], "16/3");
    assert!((g5["approx"].as_f64().unwrap() - 16.0 / 3.0).abs() < 1e-12);
    assert_eq!(json(&run(&["bounds", "mm", "6"]))["value"], "9");
    assert_eq!(json(&run(&["bounds", "parity", "--r", "3", "--n", "6"]))["value"], "16");

    let e = json(&run(&["bounds", "exponent", "--profile", "0,1", "--r", "3"]));
    assert_eq!((e["p"].as_u64(), e["i"].as_u64(), e["f"].as_u64()), (Some(1), Some(0), Some(2)));

    let cells = json(&run(&["bounds", "table1", "--n", "4", "--row", "h", "--profile", "0,1"]));
    assert_eq!(cells[0]["value"], "4");
    let all = json(&run(&["bounds", "table1", "--n", "4"]));
    assert_eq!(all.as_array().unwrap().len(), 14);
    let p = json(&run(&["bounds", "prop1", "v", "--r", "3", "--n", "7"]));
    assert_eq!(p["claim"]["value"]["value"], "4");
}

#[test]
fn construct_emits_text_format() {
    let out = run(&["construct", "thm1_extremal", "--n", "6"]);
    assert_eq!(stdout(&out), "6 3\n0 1 2\n3 4 5\n");
    let out = run(&["construct", "complete", "--n", "4", "--r", "3"]);
    assert_eq!(stdout(&out), "4 3\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");

    // The construction pipes straight into count.
    let built = run(&["construct", "thm1-extremal", "--n", "10"]);
    let v = json(&run_stdin(&["count", "-p", "strong", "-m", "maximal"], &stdout(&built)));
    assert_eq!(v["count"], 36);

    let sun = run(&["construct", "thm3i_sunflower", "--n", "14", "--r", "3", "--profile", "0,1"]);
    let v = json(&run_stdin(&["count", "-p", "0,1"], &stdout(&sun)));
    assert!(v["count"].as_u64().unwrap() >= 243);
}

#[test]
fn search_extremal_reports_and_is_stable() {
    let args = ["search-extremal", "--n", "4", "--r", "2", "-p", "0,1", "-m", "all", "--no-isolated"];
    let first = run(&args);
    let v = json(&first);
    assert_eq!(v["maximum"], 9);
    assert_eq!(v["elapsed_ms"], 0);
    assert_eq!(first.stdout, run(&args).stdout);

    let mut four = args.to_vec();
    four.extend(["--workers", "4"]);
    assert_eq!(first.stdout, run(&four).stdout);

    let scan = json(&run(&["search-extremal", "--n", "3", "--to", "5", "--r", "2", "-p", "1", "--no-isolated"]));
    let maxima: Vec<u64> = scan.as_array().unwrap().iter().map(|r| r["maximum"].as_u64().unwrap()).collect();
    assert_eq!(maxima, [2, 4, 4]);
}

#[test]
fn verify_quick_passes() {
    let out = run(&["verify"]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 25);
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn verify_full_includes_msis_n6() {
    let v = json(&run(&["verify", "--level", "full", "--workers", "2"]));
    let check = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "g3_msis_n6").unwrap();
    assert_eq!(check["observed"], "9");
    assert_eq!(check["pass"], true);
}

#[test]
fn verify_with_corrupted_formula_exits_one() {
    let out = run(&["verify", "--level", "full", "--inject-fault", "g"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "g"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "mm", "0"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "thm1_extremal", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["search-extremal", "--n", "8", "--r", "2", "-p", "strong"]).status.code(), Some(2));

    let bad = run_stdin(&["count", "-p", "strong"], "3 3\n0 1\n");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
    assert_eq!(run_stdin(&["count", "-p", "0,5"], TRIPLE).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
