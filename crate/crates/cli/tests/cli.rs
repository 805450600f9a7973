//! End-to-end tests of the `gen-euler` binary: exit codes, golden output
//! lines, format contracts, and the canonical-JSON round-trip guarantee.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gen-euler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn compute_prints_the_lehmer_column() {
    let output = run(&[
        "compute",
        "--d",
        "3",
        "--n-max",
        "9",
        "--method",
        "recursion",
    ]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.contains("\n9 -1513\n"), "got: {stdout}");
    assert!(stdout.contains("\n6 19\n"));
    assert!(
        stderr_of(&output).contains("elapsed:"),
        "timing goes to stderr"
    );
}

#[test]
fn compute_bruteforce_agrees_on_the_worked_example() {
    let output = run(&[
        "compute",
        "--d",
        "2",
        "--n-max",
        "4",
        "--method",
        "bruteforce",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("\n4 5\n"));
}

#[test]
fn compute_bfile_is_bare_index_value_lines() {
    let output = run(&["compute", "--d", "2", "--n-max", "4", "--format", "bfile"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "0 1\n1 0\n2 -1\n3 0\n4 5\n");
}

#[test]
fn compute_csv_has_header_and_rows() {
    let output = run(&["compute", "--d", "2", "--n-max", "4", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.starts_with("n,value\n"));
    assert!(stdout.contains("2,-1\n"));
    assert!(stdout.contains("4,5\n"));
}

#[test]
fn compute_json_round_trips_byte_identically() {
    let output = run(&["compute", "--d", "2", "--n-max", "6", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    let parsed: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    let mut reserialized = serde_json::to_string_pretty(&parsed).unwrap();
    reserialized.push('\n');
    assert_eq!(reserialized, text, "canonical form survives a round trip");
    assert_eq!(
        parsed["values"][6]["value"], "-61",
        "big integers are strings"
    );
    assert_eq!(parsed["method"], "recursion");
}

#[test]
fn compute_rejects_modulus_below_two() {
    let output = run(&["compute", "--d", "1", "--n-max", "4"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr_of(&output).contains("at least 2"));
}

#[test]
fn compute_exceeded_cap_is_a_runtime_failure() {
    let output = run(&[
        "compute",
        "--d",
        "2",
        "--n-max",
        "8",
        "--method",
        "bruteforce",
        "--cap",
        "10",
    ]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr_of(&output).contains("cap"));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let output = run(&["compute", "--d", "2", "--n-max", "4", "--frobnicate"]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn crosscheck_agrees_for_small_tables() {
    let output = run(&["crosscheck", "--d", "2", "--n-max", "8"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("all methods agree: yes"));
}

#[test]
fn crosscheck_reports_the_d4_value() {
    let output = run(&["crosscheck", "--d", "4", "--n-max", "8"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.contains("8 69 69 69 69 69 69 yes"), "got: {stdout}");
}

#[test]
fn crosscheck_of_the_empty_range_is_a_single_row() {
    let output = run(&["crosscheck", "--d", "2", "--n-max", "0"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("0 1 1 1 1 1 1 yes"));
}

#[test]
fn crosscheck_csv_and_json_formats_hold_together() {
    let output = run(&["crosscheck", "--d", "3", "--n-max", "6", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout
        .starts_with("n,recursion,series,compositions,determinant,bruteforce,alternating,agree\n"));
    assert!(stdout.contains("6,19,19,19,19,19,19,yes"));

    let output = run(&["crosscheck", "--d", "3", "--n-max", "6", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&output)).expect("valid JSON");
    assert_eq!(parsed["all_agree"], true);
    assert_eq!(parsed["rows"][6]["outcomes"][0]["value"], "19");
}

#[test]
fn crosscheck_skips_brute_force_beyond_the_cap() {
    // cap 10 blocks enumeration at n = 8 but the exact methods still agree.
    let output = run(&["crosscheck", "--d", "2", "--n-max", "8", "--cap", "10"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.contains("skipped"));
    assert!(stdout.contains("all methods agree: yes"));
}

#[test]
fn involution_audits_the_worked_figure() {
    let output = run(&["involution", "--d", "2", "--n", "4", "--pairs"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.contains("partitions: 7"));
    assert!(stdout.contains("fixed points: 5"));
    assert!(stdout.contains("1 2/3 4 <-> 1 2 3 4"));
    assert!(stdout.contains("verdict: PASS"));
}

#[test]
fn involution_handles_the_d3_case() {
    let output = run(&["involution", "--d", "3", "--n", "6"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.contains("partitions: 21"));
    assert!(stdout.contains("fixed points: 19"));
}

#[test]
fn involution_rejects_non_divisible_n() {
    let output = run(&["involution", "--d", "2", "--n", "3"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr_of(&output).contains("not a multiple"));
}

#[test]
fn involution_json_carries_the_verdict() {
    let output = run(&["involution", "--d", "2", "--n", "4", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&output)).expect("valid JSON");
    assert_eq!(parsed["pass"], true);
    assert_eq!(parsed["partitions"], 7);
    assert_eq!(parsed["signed_sum"], "5");
}

#[test]
fn congruence_sweeps_pass_and_validate_parameters() {
    let output = run(&["congruence", "--name", "p2", "--p", "3", "--n-max", "6"]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("all congruences hold: yes"));

    let output = run(&["congruence", "--name", "2p2", "--p", "2", "--n-max", "6"]);
    assert_eq!(exit_code(&output), 2);

    let output = run(&["congruence", "--name", "mod2", "--n-max", "6"]);
    assert_eq!(exit_code(&output), 2, "mod2 without --d is a usage error");

    let output = run(&["congruence", "--name", "p2", "--d", "3", "--n-max", "6"]);
    assert_eq!(exit_code(&output), 2, "p2 wants --p, not --d");
}

#[test]
fn congruence_csv_lists_residues() {
    let output = run(&[
        "congruence",
        "--name",
        "mod3",
        "--d",
        "2",
        "--n-max",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.starts_with("n,modulus,observed,expected,pass\n"));
    assert!(stdout.contains("3,3,2,2,yes"));
}

#[test]
fn mobius_prints_the_subgroup_table() {
    let output = run(&["mobius", "--p", "2", "--n", "2"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    assert!(stdout.contains("<e> 1 5 4"), "got: {stdout}");
    assert!(stdout.contains("<g,h> 2 1 1"));
    assert!(stdout.contains("verdict: PASS"));
}

#[test]
fn mobius_json_reports_beta_of_the_trivial_subgroup() {
    let output = run(&["mobius", "--p", "3", "--n", "2", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&output)).expect("valid JSON");
    assert_eq!(parsed["pass"], true);
    assert_eq!(parsed["subgroups"][0]["subgroup"], "<e>");
    assert_eq!(parsed["subgroups"][0]["beta"], "18");
}

#[test]
fn mobius_rejects_composite_p() {
    let output = run(&["mobius", "--p", "4", "--n", "2"]);
    assert_eq!(exit_code(&output), 2);
    assert!(stderr_of(&output).contains("not prime"));
}

#[test]
fn output_flag_writes_the_file_instead_of_stdout() {
    let path = std::env::temp_dir().join(format!("gen-euler-cli-test-{}.txt", std::process::id()));
    let path_str = path.to_str().unwrap();
    let output = run(&[
        "compute", "--d", "2", "--n-max", "4", "--format", "bfile", "--output", path_str,
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).is_empty(), "data went to the file");
    let written = std::fs::read_to_string(&path).expect("file was created");
    assert_eq!(written, "0 1\n1 0\n2 -1\n3 0\n4 5\n");
    std::fs::remove_file(&path).ok();
}
