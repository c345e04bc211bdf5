use std::process::Command;

use fring::cli::{execute, parse_session, run_session, Mode, Outcome, Record, Settings};

fn binary(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_fring")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

fn session(name: &str) -> String {
    format!("{}/sessions/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(text: &str) -> Vec<Record> {
    run_session(&parse_session(text).unwrap(), Settings::default())
}

#[test]
fn intro_session_answers() {
    let (out, _, code) = binary(&["--session", &session("intro.fr")]);
    assert!(out.contains("basis: {X1^2 + X3, X2 - X3}"));
    assert!(out.contains("[6] member F \"X3^3 + X1 + X3\" (definite)\n  answer: no"));
    // the residue listing of a positive-dimensional quotient is cut off
    assert_eq!(code, 3);
}

#[test]
fn solver_session() {
    let (out, _, code) = binary(&["--session", &session("groups.fr")]);
    assert_eq!(code, 0);
    assert!(out.contains("generators: {(b, -1)}"));
    assert!(out.contains("inverse: b"));
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("fring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.fr");
    std::fs::write(&f, "ring vars X Y ord deglex over QQ\nlet F = [X + W]\n").unwrap();
    let (out, err, code) = binary(&["--session", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: line 2, column 10"), "{err}");
}

#[test]
fn runtime_errors_exit_one() {
    let (out, code) = execute("ring letters a b ord lenlex over QQ\ncmd product [a] [b]\n", Settings::default(), Mode::Text);
    assert_eq!(code, 1);
    assert!(out.contains("requires a commutative ring"));
}

#[test]
fn budget_exhaustion_is_indeterminate() {
    let text = "ring letters a b c ord lenlex over QQ side two-sided\nset budget 3\ncmd gb [aba - b; bab - c; abc - a]\n";
    let r = run(text);
    assert_eq!(r[1].outcome, Outcome::Indeterminate);
    assert_eq!(r[1].fields["status"], "budget exhausted");
}

#[test]
fn machine_output_is_stable_and_round_trips() {
    let path = session("applications.fr");
    let (a, _, ca) = binary(&["--session", &path, "--machine", "--seed", "7"]);
    let (b, _, cb) = binary(&["--session", &path, "--machine", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(ca, cb);
    for line in a.lines() {
        let r: Record = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), line);
    }
    let (c, _, _) = binary(&["--session", &path, "--machine", "--seed", "8"]);
    assert_ne!(a, c);
}

#[test]
fn env_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_fring"))
        .env("FRING_SESSION", session("intro.fr"))
        .env("FRING_MACHINE", "true")
        .env("FRING_BUDGET", "1")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with('{'));
    assert!(text.contains("budget exhausted"));
}

/// Printed bases parse back to the same polynomials.
#[test]
fn printed_bases_reparse() {
    let r = run("ring vars X Y Z ord lex over QQ\ncmd gb [X^2 - 2Y*Z + 1/3; Y^3 - X*Z; -Z^2 + X]\n");
    let basis: Vec<String> = r[1].fields["basis"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    let list = basis.join("; ");
    let again = run(&format!("ring vars X Y Z ord lex over QQ\ncmd gb [{list}]\nlet B = [{list}]\ncmd isgb B\n"));
    assert_eq!(again[1].fields["basis"], r[1].fields["basis"]);
    assert_eq!(again[2].fields["verdict"], "pass");
}

#[test]
fn empty_basis_prints_braces() {
    let (out, code) = execute("ring vars X ord deglex over QQ\ncmd gb []\n", Settings::default(), Mode::Text);
    assert_eq!(code, 0);
    assert!(out.contains("basis: {}"));
}

#[test]
fn set_changes_later_commands() {
    let r = run("ring coefficients over ZZ\nset seed 3\ncmd probe 10\nset seed 4\ncmd probe 10\n");
    assert_eq!(r[1].fields["seed"], 3);
    assert_eq!(r[2].fields["seed"], 4);
}
