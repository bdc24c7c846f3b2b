//! End-to-end checks of the command-line interface: output shapes, format
//! handling, and the stable exit codes (0 ok, 1 usage/parse, 2 solver
//! non-convergence, 3 strict axiom violation, 4 falsifier witness).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_catrank"))
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
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
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_report_on_example1() {
    let out = run(&["solve", &fixture("example1.apx"), "--tol", "1e-6"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["arguments"].as_array().unwrap().len(), 5);
    let strengths: Vec<f64> = report["strengths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    for (got, want) in strengths.iter().zip([0.72, 0.43, 1.0, 0.40, 0.51]) {
        assert!((got - want).abs() < 0.005);
    }
    assert!(report["iterations"].as_u64().unwrap() > 0);
    assert!(report["residual"].as_f64().unwrap() < 1e-5);
}

#[test]
fn solve_certify_csv_has_interval_columns() {
    let out = run(&["solve", &fixture("example1.apx"), "--certify", "--out", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("argument,strength,lower,upper"));
    assert_eq!(lines.count(), 5);
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        let (lo, hi): (f64, f64) = (fields[2].parse().unwrap(), fields[3].parse().unwrap());
        let v: f64 = fields[1].parse().unwrap();
        assert!(lo <= v && v <= hi);
    }
}

#[test]
fn solve_reads_stdin_and_reports_empty_frameworks() {
    let out = run_stdin(&["solve"], "");
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["arguments"].as_array().unwrap().len(), 0);
    assert_eq!(report["ranking"].as_array().unwrap().len(), 0);
}

#[test]
fn malformed_apx_fails_with_line_number() {
    let out = run_stdin(&["solve"], "arg(a).\nbogus\n");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn non_convergence_exits_2() {
    let out = run(&[
        "solve",
        &fixture("example1.apx"),
        "--tol",
        "1e-15",
        "--max-iter",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rank_prints_single_ordered_line() {
    let out = run(&["rank", &fixture("example1.apx")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "x3 > x1 > x5 > x2 > x4");

    // identical attacker rows merge into one comma-joined class
    let twin = "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(a,c).";
    let out = run_stdin(&["rank"], twin);
    assert_eq!(stdout(&out).trim(), "a > b, c");

    let out = run_stdin(&["rank"], "arg(a).\narg(b).");
    assert_eq!(stdout(&out).trim(), "a, b");
}

#[test]
fn extensions_output_shapes() {
    let out = run(&["extensions", &fixture("example1.apx"), "--semantics", "grounded"]);
    assert_eq!(stdout(&out).trim(), "{x1, x3}");

    let out = run(&["extensions", &fixture("example1.apx"), "--semantics", "stable"]);
    assert_eq!(stdout(&out).trim(), "(none)");

    let out = run(&["extensions", &fixture("example1.apx"), "--semantics", "preferred"]);
    assert_eq!(stdout(&out).trim(), "{x1, x3}");

    let out = run_stdin(&["extensions", "--semantics", "preferred"], "arg(a).\narg(b).");
    assert_eq!(stdout(&out).trim(), "{a, b}");
}

#[test]
fn axioms_strict_mode_flags_violations() {
    let out = run(&["axioms", &fixture("w_cp.apx"), "--axioms", "CP"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("VIOLATION (x, y)"));

    let out = run(&["axioms", &fixture("w_cp.apx"), "--axioms", "CP", "--strict"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["axioms", &fixture("w_qp.apx"), "--axioms", "QP,VP", "--strict"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("VP   pass"));

    let out = run(&["axioms", &fixture("example1.apx"), "--axioms", "VP,DP,CT,SCT", "--strict"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_axiom_is_a_usage_error() {
    let out = run(&["axioms", &fixture("example1.apx"), "--axioms", "XYZ"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["falsify", "--axiom", "XYZ"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn falsify_exit_codes() {
    let out = run(&["falsify", "--axiom", "CP", "--trials", "2000", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&out);
    assert!(text.contains("violating pair"));
    assert!(text.contains("arg("));

    let out = run(&["falsify", "--axiom", "VP", "--trials", "200", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no witness in 200 trials"));
}

#[test]
fn gen_produces_apx_and_validates_probability() {
    let out = run(&["gen", "--n", "5", "--edge-prob", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.starts_with("arg(")));

    let out = run(&["gen", "--n", "3", "--edge-prob", "1.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn convert_round_trips_between_formats() {
    let tgf = "1 a\n2 b\n3 c\n#\n1 2\n2 3\n3 3\n";
    let apx = stdout(&run_stdin(&["convert", "--format", "tgf", "--to", "apx"], tgf));
    assert_eq!(apx, "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\natt(c,c).\n");
    let back = stdout(&run_stdin(&["convert", "--to", "tgf"], &apx));
    assert_eq!(back, tgf);

    let dot = stdout(&run_stdin(&["convert", "--to", "dot"], &apx));
    assert!(dot.starts_with("digraph af {"));
    assert!(dot.contains("\"c\" -> \"c\";"));
}

#[test]
fn format_detection_by_extension() {
    let dir = std::env::temp_dir().join("catrank-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("two.tgf");
    std::fs::write(&path, "1 a\n2 b\n#\n1 2\n").unwrap();
    let out = run(&["rank", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "a > b");
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["solve", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
