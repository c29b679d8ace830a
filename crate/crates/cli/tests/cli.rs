use assert_cmd::Command;
use predicates::prelude::*;

fn wn() -> Command {
    Command::cargo_bin("wn").unwrap()
}

#[test]
fn bracket_json() {
    wn().args(["bracket", "-n", "2", "[1, 1+x*y]", "[x, y]"])
        .assert()
        .success()
        .stdout(predicate::str::contains(r#""bracket":"[1, -x*y + 1]""#));
}

#[test]
fn bracket_arity_mismatch_exits_3() {
    wn().args(["bracket", "-n", "2", "[1]", "[x, y]"])
        .assert()
        .code(3);
}

#[test]
fn bad_grammar_exits_3() {
    wn().args(["apply", "-n", "2", "[1, 0]", "x +* y"])
        .assert()
        .code(3);
}

#[test]
fn unknown_flag_exits_2() {
    wn().args(["div", "-n", "2", "--frobnicate", "[x, y]"])
        .assert()
        .code(2);
}

#[test]
fn missing_subcommand_exits_2() {
    wn().assert().code(2);
}

#[test]
fn cap_guard_respects_env() {
    wn().args(["closure", "-n", "2", "--cap", "9", "[x, y]"])
        .env("WN_MAX_CAP", "8")
        .assert()
        .code(2);
    wn().args(["closure", "-n", "2", "--cap", "9", "[x, y]"])
        .env("WN_MAX_CAP", "9")
        .assert()
        .success();
    // default guard is 12
    wn().args(["closure", "-n", "2", "--cap", "13", "[x, y]"])
        .env_remove("WN_MAX_CAP")
        .assert()
        .code(2);
}

#[test]
fn verification_failure_exits_1() {
    // [d/dx, x d/dx] = d/dx is not mu1*a + mu2*b with these factors
    wn().args([
        "minor-identity",
        "-n",
        "2",
        "[1, 0]",
        "[x, 0]",
        "--mu1",
        "x",
        "--mu2",
        "x",
    ])
    .assert()
    .code(1);
}

#[test]
fn round_trip_poly_and_deriv() {
    // output strings re-parse to the same values
    let out = wn()
        .args(["bracket", "-n", "2", "[x^2 - 1/2*y, x*y]", "[y, -x]"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let printed = v["report"]["bracket"].as_str().unwrap().to_string();
    // bracketing the result with zero must print identically
    let out2 = wn()
        .args(["bracket", "-n", "2", &printed, "[0, 0]"])
        .output()
        .unwrap();
    let v2: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    // [d, 0] = 0; instead re-feed through apply to confirm it parses
    assert_eq!(v2["report"]["bracket"].as_str().unwrap(), "[0, 0]");
    wn().args(["div", "-n", "2", &printed]).assert().success();
}

#[test]
fn json_is_byte_reproducible_and_key_sorted() {
    let run = || {
        wn().args(["verify", "minor-identity", "--seed", "7", "--count", "3"])
            .output()
            .unwrap()
            .stdout
    };
    let a = run();
    let b = run();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    // top-level keys appear in sorted order
    let report_pos = text.find("\"report\"").unwrap();
    let seed_pos = text.find("\"seed\"").unwrap();
    assert!(report_pos < seed_pos);
    assert!(text.contains("\"seed\":7"));
}

#[test]
fn verify_products_passes() {
    wn().args(["verify", "products", "-n", "2", "--imax", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"all_pass\":true"));
}

#[test]
fn verify_sl_iso_passes() {
    wn().args(["verify", "sl-iso", "-n", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"pass\":true"));
}

#[test]
fn verify_example_simple_reports_no_obstruction() {
    wn().args(["verify", "example-simple", "--deg-f", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("no obstruction up to bounds"));
}

#[test]
fn darboux_witnesses() {
    wn().args([
        "darboux", "-n", "2", "--deriv", "[x, -y]", "--deg-f", "2", "--deg-cof", "1",
    ])
    .assert()
    .success()
    .stdout(predicate::str::contains("\"found\":true"));
}

#[test]
fn potential_requires_n2() {
    wn().args(["potential", "-n", "3", "[x, y, z]"]).assert().code(2);
}

#[test]
fn grade_components() {
    wn().args(["grade", "-n", "2", "[1 + x^2, y]"])
        .assert()
        .success()
        .stdout(predicate::str::contains(r#""-1":"[1, 0]""#));
}

#[test]
fn build_l_dimension() {
    wn().args(["build-L", "-n", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"dim\":15"));
}
