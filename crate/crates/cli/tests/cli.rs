//! Black-box tests against the compiled binary: output shapes, exit codes
//! and determinism.

use std::process::{Command, Output};

fn altwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altwords"))
        .args(args)
        .env_remove("ALTWORDS_THREADS")
        .output()
        .expect("the binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = altwords(args);
    assert!(
        out.status.success(),
        "{args:?} failed with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn failure_of(args: &[&str]) -> (i32, String) {
    let out = altwords(args);
    let code = out.status.code().expect("terminated by exit code");
    assert_ne!(code, 0, "{args:?} unexpectedly succeeded");
    (code, String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn count_prints_the_bare_number() {
    assert_eq!(
        stdout_of(&["count", "--k", "4", "--len", "4", "--dir", "downup"]),
        "31\n"
    );
    assert_eq!(
        stdout_of(&["count", "--k", "7", "--len", "10", "--dir", "updown"]),
        "1897214\n"
    );
    // --avoid defaults the direction to updown
    assert_eq!(
        stdout_of(&["count", "--k", "4", "--len", "4", "--avoid", "123"]),
        "20\n"
    );
    assert_eq!(
        stdout_of(&["count", "--k", "4", "--len", "5", "--avoid", "132"]),
        "27\n"
    );
}

#[test]
fn count_methods_agree_from_the_outside() {
    for method in ["recurrence", "brute", "ideal"] {
        assert_eq!(
            stdout_of(&["count", "--k", "4", "--len", "4", "--dir", "downup", "--method", method]),
            "31\n",
            "method {method}"
        );
    }
    for method in ["formula", "brute"] {
        assert_eq!(
            stdout_of(&["count", "--k", "4", "--len", "4", "--avoid", "321", "--method", method]),
            "31\n",
            "method {method}"
        );
    }
}

#[test]
fn table_reproduces_the_bundled_grid() {
    let rendered = stdout_of(&["table", "--k", "2..7", "--len", "0..10", "--dir", "downup"]);
    assert_eq!(rendered, include_str!("../../../fixtures/table1.csv"));
}

#[test]
fn table_json_is_well_formed() {
    let rendered = stdout_of(&[
        "table", "--k", "3..4", "--len", "0..4", "--avoid", "123", "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&rendered).expect("valid JSON");
    assert_eq!(parsed["direction"], "up-down");
    assert_eq!(parsed["pattern"], "123");
    let entries = parsed["entries"].as_array().expect("entry list");
    assert_eq!(entries.len(), 2 * 5);
    let cell = entries
        .iter()
        .find(|e| e["k"] == 4 && e["len"] == 4)
        .expect("the k=4 len=4 cell");
    assert_eq!(cell["value"], "20");
    assert_eq!(cell["method"], "formula");
}

#[test]
fn map_subcommand_matches_the_worked_examples() {
    let map = |which: &str, input: &str, k: &str| {
        stdout_of(&["map", "--which", which, "--input", input, "--k", k])
    };
    assert_eq!(map("word-to-ideal", "3241423", "4"), "1120211\n");
    assert_eq!(map("ideal-to-word", "1120211", "4"), "3241423\n");
    assert_eq!(map("132-to-123-even", "3435121213", "5"), "3534131212\n");
    assert_eq!(map("123-to-132-even", "3534131212", "5"), "3435121213\n");
    assert_eq!(map("132-to-123-even", "1212", "2"), "1212\n");
    assert_eq!(map("132-to-123-odd", "21213", "3"), "21312\n");
    assert_eq!(map("312-to-123-odd", "132", "3"), "231\n");
    assert_eq!(map("123-to-321", "1312", "3"), "132\n");
    assert_eq!(map("321-to-123", "132", "3"), "1312\n");
}

#[test]
fn list_enumerates_in_order() {
    assert_eq!(
        stdout_of(&["list", "--k", "3", "--len", "3", "--dir", "updown"]),
        "121\n131\n132\n231\n232\n"
    );
    assert_eq!(
        stdout_of(&["list", "--k", "3", "--len", "3", "--avoid", "132"]),
        "121\n131\n231\n232\n"
    );
    assert_eq!(
        stdout_of(&["list", "--k", "1", "--len", "2", "--dir", "updown"]),
        ""
    );
}

#[test]
fn verify_suites_pass_and_report() {
    let report = stdout_of(&["verify", "--suite", "table2"]);
    assert!(
        report.contains("ok   table2/pair01-1212"),
        "report was:\n{report}"
    );
    assert!(report.contains("0 failed"), "report was:\n{report}");
    let report = stdout_of(&["verify", "--suite", "table1"]);
    assert!(
        report.contains("ok   table1/k7/len10/brute"),
        "report was:\n{report}"
    );
    assert!(report.contains("0 failed"), "report was:\n{report}");
}

#[test]
fn usage_errors_exit_with_2() {
    let (code, _) = failure_of(&["count", "--k", "4", "--dir", "updown"]);
    assert_eq!(code, 2, "missing --len");
    let (code, stderr) = failure_of(&["count", "--k", "4", "--len", "4"]);
    assert_eq!(code, 2, "missing --dir without --avoid: {stderr}");
    let (code, stderr) = failure_of(&["count", "--k", "4", "--len", "4", "--avoid", "124"]);
    assert_eq!(code, 2, "bad pattern: {stderr}");
    let (code, stderr) = failure_of(&["table", "--k", "5..2", "--len", "0..3", "--dir", "updown"]);
    assert_eq!(code, 2, "inverted range: {stderr}");
    let (code, _) = failure_of(&["frobnicate"]);
    assert_eq!(code, 2, "unknown subcommand");
}

#[test]
fn domain_errors_exit_with_3() {
    let (code, stderr) = failure_of(&["count", "--k", "0", "--len", "3", "--dir", "updown"]);
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("alphabet"), "stderr was: {stderr}");

    // the formula route only covers pattern-avoiding families
    let (code, stderr) = failure_of(&[
        "count", "--k", "4", "--len", "4", "--dir", "updown", "--method", "formula",
    ]);
    assert_eq!(code, 3, "{stderr}");

    // the ideal route skips length 1
    let (code, stderr) = failure_of(&[
        "count", "--k", "4", "--len", "1", "--dir", "updown", "--method", "ideal",
    ]);
    assert_eq!(code, 3, "{stderr}");

    // map inputs must alternate the right way
    let (code, stderr) = failure_of(&[
        "map",
        "--which",
        "132-to-123-even",
        "--input",
        "1231",
        "--k",
        "3",
    ]);
    assert_eq!(code, 3, "{stderr}");
    let (code, stderr) = failure_of(&[
        "map",
        "--which",
        "word-to-ideal",
        "--input",
        "121",
        "--k",
        "3",
    ]);
    assert_eq!(code, 3, "{stderr}");

    // a profile may not outgrow its chain
    let (code, stderr) = failure_of(&[
        "map",
        "--which",
        "ideal-to-word",
        "--input",
        "9",
        "--k",
        "3",
    ]);
    assert_eq!(code, 3, "{stderr}");
}

#[test]
fn runs_are_deterministic() {
    let args = ["table", "--k", "2..6", "--len", "0..8", "--dir", "downup"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let args = ["verify", "--suite", "bijections"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn thread_cap_does_not_change_results() {
    let baseline = stdout_of(&["verify", "--suite", "table2"]);
    let capped = Command::new(env!("CARGO_BIN_EXE_altwords"))
        .args(["verify", "--suite", "table2"])
        .env("ALTWORDS_THREADS", "1")
        .output()
        .expect("the binary runs");
    assert!(capped.status.success());
    assert_eq!(String::from_utf8(capped.stdout).unwrap(), baseline);
}
