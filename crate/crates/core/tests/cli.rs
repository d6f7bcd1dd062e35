use std::io::Write;
use std::process::{Command, Output};

use minorkit::classify::{Pattern, Report, Status};
use minorkit::radgen::Verification;

fn minorkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorkit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn matrix_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json_report(args: &[&str]) -> Report {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let o = minorkit(&all);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    Report::from_json(&stdout(&o)).unwrap()
}

const SIX_COLUMNS: &str = "\
# two-row pencil with one block of each kind
vars: x1 x2 x3 x4 x5 x6

x1 + x6; x2; x2 + x3; x4; x2 + x6; x4
-x6; x1; x1 - x3 + x4; -x4 + x5; x1 - x6; -x4 + x5 + x6;
";

#[test]
fn corner_zero_blocks_char_zero() {
    let r = json_report(&["analyze", "--blocks", "J(0,1) B(1) B(1) B(1) J(1,1)", "--char", "0", "--verify"]);
    assert_eq!(r.pattern, Pattern::CornerZero);
    assert_eq!(r.height.value, Some(4));
    assert_eq!((r.cd.value, r.ara.value), (Some(5), Some(5)));
    assert!(r.cd.is_exact() && r.ara.is_exact());
    assert_eq!(r.witness.as_ref().unwrap().count, 5);
    assert_eq!(r.beats_generic_bound, Some(true));
}

#[test]
fn generic_char_p_text_output() {
    let o = minorkit(&["analyze", "--blocks", "B(1) B(1) B(1) B(1) B(1)", "--char", "32003"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("generic"), "{out}");
    assert!(out.contains("verified"), "{out}");
    let r = json_report(&["analyze", "--blocks", "B(1) B(1) B(1) B(1) B(1)", "--char", "32003"]);
    assert_eq!((r.height.value, r.cd.value, r.ara.value), (Some(4), Some(4), Some(7)));
    assert_eq!(r.beats_generic_bound, Some(false));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["analyze", "--blocks", "J(0,2) J(1,1) B(2)", "--char", "0", "--output", "json"];
    let a = stdout(&minorkit(&args));
    let b = stdout(&minorkit(&args));
    assert_eq!(a, b);
    let r = Report::from_json(&a).unwrap();
    assert_eq!(r.to_json().trim(), a.trim());
}

#[test]
fn decompose_matrix_file() {
    let f = matrix_file(SIX_COLUMNS);
    let o = minorkit(&["decompose", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("B(2)") && out.contains("N(1)") && out.contains("J("), "{out}");
    assert!(out.contains("height          4"), "{out}");
    assert!(out.contains("certificate     verified"), "{out}");
}

#[test]
fn analyze_matrix_file_with_field_header() {
    let f = matrix_file("vars: a b c d\nfield: 101\na; b\nc; d\n");
    let r = json_report(&["analyze", "--file", f.path().to_str().unwrap()]);
    assert_eq!(r.characteristic, 101);
    assert_eq!(r.pattern, Pattern::Principal);
    assert_eq!(r.ara.value, Some(1));
}

#[test]
fn field_flag_conflicting_with_header() {
    let f = matrix_file("vars: a b c d\nfield: 101\na; b\nc; d\n");
    let path = f.path().to_str().unwrap();
    let o = minorkit(&["analyze", "--file", path, "--char", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("101"), "{}", stderr(&o));
    assert_eq!(minorkit(&["analyze", "--file", path, "--char", "101"]).status.code(), Some(0));
}

#[test]
fn eigenvalues_outside_the_field() {
    let f = matrix_file("vars: x y\nx; y\ny; -x\n");
    let o = minorkit(&["decompose", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
}

#[test]
fn syntax_errors_carry_positions() {
    let f = matrix_file("vars: x1 x2\nx1*x2; x1\nx2; x1\n");
    let o = minorkit(&["analyze", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("line 2, column 1"), "{err}");
    assert!(err.contains("not a linear form"), "{err}");

    let f = matrix_file("vars: x1 x2\nx1; x2\nx2; 3*w\n");
    let err = stderr(&minorkit(&["analyze", "--file", f.path().to_str().unwrap()]));
    assert!(err.contains("line 3") && err.contains('w'), "{err}");

    let f = matrix_file("x1; x2\nx2; x1\n");
    let err = stderr(&minorkit(&["analyze", "--file", f.path().to_str().unwrap()]));
    assert!(err.contains("line 1") && err.contains("vars:"), "{err}");

    let f = matrix_file("vars: x1 x2\nx1; x2\nx2\n");
    let o = minorkit(&["analyze", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("entries"), "{}", stderr(&o));
}

#[test]
fn bad_block_spec_and_characteristic() {
    assert_eq!(minorkit(&["analyze", "--blocks", "Q(1)", "--char", "0"]).status.code(), Some(1));
    assert_eq!(minorkit(&["analyze", "--blocks", "B(1) B(1)", "--char", "6"]).status.code(), Some(1));
}

#[test]
fn resource_cap_exit_code() {
    let o = minorkit(&["analyze", "--blocks", "B(1) B(1) B(1) B(1)", "--char", "0", "--verify", "--pair-cap", "1"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn verification_can_be_skipped() {
    let o = minorkit(&["analyze", "--blocks", "B(1) B(1) B(1) B(1)", "--char", "0", "--no-verify", "--pair-cap", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(!stdout(&o).contains(" verified"), "{}", stdout(&o));

    // 2 x 8 generic has 16 variables, above the default cap
    let generic8 = vec!["B(1)"; 8].join(" ");
    let o = minorkit(&["analyze", "--blocks", &generic8, "--char", "32003"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = json_report(&["analyze", "--blocks", &generic8, "--char", "32003"]);
    assert_eq!(r.ara.value, Some(13));
    assert_eq!(r.ara.status, Status::Exact);
    assert!(matches!(r.witness.as_ref().unwrap().verification, Verification::Skipped(_)));
}

#[test]
fn nilpotent_blocks_shift_cd() {
    let base = json_report(&["analyze", "--blocks", "B(3)", "--char", "0"]);
    let ext = json_report(&["analyze", "--blocks", "B(3) N(2)", "--char", "0"]);
    assert_eq!(ext.cd.value, base.cd.value.map(|c| c + 2));
    assert_eq!(ext.nilpotent_vars, 2);
}
