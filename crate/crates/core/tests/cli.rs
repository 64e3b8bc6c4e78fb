//! Command line behaviour: exit codes, output and JSON determinism.

use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qlat::cli::run(std::iter::once("qlat").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, _) = run(&full);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad json ({e}): {out}")))
}

#[test]
fn distributivity_fails_in_the_plane() {
    let (code, j) = run_json(&["check-law", "distributivity", "--dim", "2"]);
    assert_eq!(code, 1);
    assert_eq!(j["status"], "counterexample_found");
    assert!(j["witness"].is_object());
}

#[test]
fn modularity_holds_in_finite_dimension() {
    let (code, j) = run_json(&["check-law", "modularity", "--dim", "4", "--trials", "300"]);
    assert_eq!(code, 0);
    assert_eq!(j["status"], "no_counterexample");
}

#[test]
fn unknown_law_is_a_usage_error() {
    let (code, _, err) = run(&["check-law", "nosuchlaw"]);
    assert_eq!(code, 2);
    assert!(err.contains("distributivity"));
}

#[test]
fn falsify_accepts_equations_and_bare_formulas() {
    let (code, _) = run_json(&["falsify", "x & (y | z) = (x & y) | (x & z)"]);
    assert_eq!(code, 1);
    let (code, j) = run_json(&["falsify", "x | ~x", "--dim", "3", "--trials", "50"]);
    assert_eq!(code, 0);
    assert_eq!(j["trials"], 50);
    let (code, _, _) = run(&["falsify", "x & & y"]);
    assert_eq!(code, 2);
}

#[test]
fn separate_reports_the_route() {
    let (code, out, _) = run(&["separate", "2", "4", "--trials", "200"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("alpha"));
    let (code, j) = run_json(&["separate", "2", "3", "--trials", "200"]);
    assert_eq!(code, 0);
    assert_eq!(j["status"], "separated");
    let (code, _, _) = run(&["separate", "3", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn printers() {
    let (code, out, _) = run(&["mdist", "1"]);
    assert_eq!((code, out.trim()), (0, "x & (y0 | y1) = x & y1 | x & y0"));
    let (code, out, _) = run(&["alpha", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), qlat::formula::alpha_iter(1).unwrap().to_string());
    let (code, _, _) = run(&["alpha", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn temperley_lieb_commands() {
    let (code, j) = run_json(&["tl", "relations", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(j["seed"], 0);
    let (code, j) = run_json(&["tl", "trace", "--n", "3", "--r", "5"]);
    assert_eq!(code, 0);
    assert_eq!(j["projector_trace"]["text"], "(d^2 - 2)/d^2");
    assert_eq!(j["all_match"], true);
    let (code, _) = run_json(&["tl", "jw", "--n", "3", "--r", "5"]);
    assert_eq!(code, 0);
    let (code, j) = run_json(&["tl", "jw", "--n", "4", "--r", "4"]);
    assert_eq!(code, 1);
    assert_eq!(j["status"], "bound_violation");
    let (code, _, _) = run(&["tl", "jw", "--n", "50"]);
    assert_eq!(code, 2);
}

#[test]
fn eval_reads_a_verdict_file() {
    let (_, out, _) = run(&["check-law", "distributivity", "--json", "--seed", "7"]);
    let path = std::env::temp_dir().join(format!("qlat-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, out).unwrap();
    let p = path.to_str().unwrap();
    let (code, j) = run_json(&["eval", "x & (y | z) = (x & y) | (x & z)", p]);
    assert_eq!(code, 0);
    assert_eq!(j["holds"], false);
    let (code, _, _) = run(&["eval", "x & w", p]);
    assert_eq!(code, 2);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn dimension_bounds() {
    assert_eq!(run(&["check-law", "modularity", "--dim", "0"]).0, 2);
    assert_eq!(run(&["check-law", "modularity", "--dim", "99"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn json_is_deterministic_and_self_describing() {
    let args = ["check-law", "distributivity", "--dim", "3", "--seed", "11", "--json"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let j: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(j["seed"], 11);
    assert_eq!(j["version"], env!("CARGO_PKG_VERSION"));
    let (_, par, _) = run(&["check-law", "distributivity", "--dim", "3", "--seed", "11", "--json", "--parallel"]);
    assert_eq!(a, par);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qlat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["mdist", "2"]), Some(0));
    assert_eq!(status(&["check-law", "distributivity"]), Some(1));
    assert_eq!(status(&["separate", "3", "3"]), Some(2));
}
