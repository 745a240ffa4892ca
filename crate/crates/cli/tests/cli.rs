use std::path::{Path, PathBuf};

use reesbound::groebner::ComputeOptions;
use reesbound::matrix::{generic_matrix, MatrixKind};
use reesbound::poly::{FieldSpec, Ring};
use reesbound_cli::pipeline::{Session, DEFAULT_REQUESTS};
use reesbound_cli::problem::{load_problem, ProblemFile};
use reesbound_cli::report::Report;
use reesbound_cli::run_with;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Outcome {
    let argv: Vec<String> = std::iter::once("reesbound").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(&argv, &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const TWISTED_CUBIC: &str = r#"
format = 1
field = "rationals"
variables = ["x", "y", "z", "w"]
t = 2

[matrix]
kind = "ordinary"
entries = [["x", "y", "z"], ["y", "z", "w"]]

[[requested]]
analysis = "height"

[[requested]]
analysis = "bounds"
k = "1..3"

[[requested]]
analysis = "classify"
"#;

#[test]
fn generic_examples() {
    let r = run(&["generic", "--kind", "ordinary", "--m", "2", "--n", "5", "--t", "2", "gs", "--s", "inf"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("max_s = +inf"), "{}", r.out);

    let r = run(&["generic", "--kind", "alternating", "--n", "5", "--t", "2", "height"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("ht Pf_4(M) = 3"), "{}", r.out);
}

#[test]
fn malformed_entry_exits_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let text = TWISTED_CUBIC.replace(r#"["x", "y", "z"]"#, r#"["x+*y", "y", "z"]"#);
    let path = write(dir.path(), "bad.toml", &text);
    let r = run(&["height", path.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("entry (1, 1)") && r.err.contains("position 2"), "{}", r.err);
    assert!(r.out.is_empty());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.toml", TWISTED_CUBIC);
    assert_eq!(run(&["analyze", good.to_str().unwrap()]).code, 0);
    assert_eq!(run(&["height", "/no/such/file.toml"]).code, 1);
    assert_eq!(run(&["frobnicate"]).code, 1);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["gs", good.to_str().unwrap(), "--s", "0"]).code, 1);

    // Over F_32003 the 2-minor bounds need characteristic 0.
    let three_rows = write(
        dir.path(),
        "three.toml",
        "format = 1\nvariables = [\"a\", \"b\", \"c\", \"d\", \"e\", \"f\", \"g\", \"h\", \"i\"]\nt = 2\n\
         [matrix]\nkind = \"ordinary\"\nentries = [[\"a\",\"b\",\"c\"],[\"d\",\"e\",\"f\"],[\"g\",\"h\",\"i\"]]\n",
    );
    let r = run(&["bounds", three_rows.to_str().unwrap(), "--k", "2"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("characteristic zero"), "{}", r.err);
    assert_eq!(run(&["bounds", three_rows.to_str().unwrap(), "--k", "2", "--field", "rationals"]).code, 0);

    let degenerate = write(
        dir.path(),
        "degenerate.toml",
        "format = 1\nvariables = [\"x\", \"y\"]\nt = 2\n[matrix]\nkind = \"ordinary\"\nentries = [[\"x\",\"y\"],[\"x\",\"y\"]]\n",
    );
    let r = run(&["gs", degenerate.to_str().unwrap(), "--s", "2"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("height 0 < expected 1"), "{}", r.err);
    assert_eq!(run(&["analyze", degenerate.to_str().unwrap()]).code, 2);
    assert_eq!(run(&["pfaffian", degenerate.to_str().unwrap()]).code, 1);
}

#[test]
fn failed_bound_hypotheses_list_the_inequality() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "thin.toml",
        "format = 1\nvariables = [\"x\", \"y\"]\nt = 2\n[matrix]\nkind = \"ordinary\"\n\
         entries = [[\"x\",\"y\",\"0\",\"0\"],[\"0\",\"x\",\"y\",\"0\"]]\n",
    );
    let r = run(&["bounds", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(r.code, 2, "{}{}", r.out, r.err);
    assert!(r.err.contains("ht I_1(M) = 2 < 3") || r.err.contains("not of generic height"), "{}", r.err);
}

#[test]
fn timeout_exits_cleanly() {
    let r = run(&["generic", "--kind", "ordinary", "--m", "4", "--n", "6", "--t", "3", "--timeout", "0.001", "height"]);
    assert_eq!(r.code, 2, "{}", r.out);
    assert!(r.err.contains("time limit"), "{}", r.err);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p.toml", TWISTED_CUBIC);
    let a = run(&["analyze", path.to_str().unwrap(), "--json"]);
    let b = run(&["analyze", path.to_str().unwrap(), "--json"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let g = |json| run(&["generic", "--kind", "symmetric", "--n", "3", "--t", "2", json]).out;
    assert_eq!(g("--json"), g("--json"));
}

#[test]
fn json_report_round_trips() {
    let ring = Ring::with_vars(&[], FieldSpec::Rationals);
    let session = Session {
        matrix: generic_matrix(2, 3, MatrixKind::Ordinary, &ring).unwrap(),
        t: 2,
        opts: ComputeOptions::default(),
    };
    let (sections, skipped) = session.run_all(&DEFAULT_REQUESTS).unwrap();
    assert!(!skipped);
    let report = session.report(sections);
    let reparsed: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(reparsed, report);
    assert_eq!(reparsed.to_text(), report.to_text());
}

#[test]
fn emitted_problem_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let r = run(&["generic", "--kind", "alternating", "--n", "5", "--t", "2", "--field", "rationals", "emit"]);
    assert_eq!(r.code, 0);
    let path = write(dir.path(), "emitted.toml", &r.out);
    let loaded = load_problem(&path).unwrap();
    assert_eq!(ProblemFile::from_toml(&loaded.to_toml()).unwrap(), loaded);
    let direct = run(&["generic", "--kind", "alternating", "--n", "5", "--t", "2", "--field", "rationals", "height"]);
    let from_file = run(&["height", path.to_str().unwrap()]);
    assert_eq!(direct.out, from_file.out);
}

/// Every text line that states a number carries a `[label]`.
fn assert_labeled(text: &str) {
    for line in text.lines() {
        if line.starts_with("==") || !line.chars().any(|c| c.is_ascii_digit()) {
            continue;
        }
        let label = line.rsplit_once("  [").map(|(_, l)| l);
        let ok = label.is_some_and(|l| {
            l.ends_with(']') && l.len() > 1 && l[..l.len() - 1].chars().all(|c| c.is_ascii_alphanumeric() || c == '-')
        });
        assert!(ok, "unlabeled numeric line: {line:?}");
    }
}

#[test]
fn numeric_lines_carry_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p.toml", TWISTED_CUBIC);
    let p = path.to_str().unwrap();
    let mut outputs = vec![
        run(&["analyze", p]),
        run(&["gs", p, "--s", "4"]),
        run(&["bounds", p, "--k", "1..4"]),
        run(&["generic", "--kind", "alternating", "--n", "6", "--t", "2", "pfaffian"]),
        run(&["generic", "--kind", "alternating", "--n", "7", "--t", "3", "--field", "rationals"]),
        run(&["generic", "--kind", "symmetric", "--n", "3", "--t", "2", "--field", "rationals"]),
        run(&["generic", "--kind", "ordinary", "--m", "3", "--n", "3", "--t", "2"]),
    ];
    outputs.push(run(&["generic", "--kind", "ordinary", "--m", "2", "--n", "2", "--t", "2", "analyze"]));
    for o in outputs {
        assert!(o.code == 0 || o.code == 2, "{}", o.err);
        assert!(!o.out.is_empty());
        assert_labeled(&o.out);
    }
}

#[test]
fn bounds_report_for_linear_maximal_minors() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p.toml", TWISTED_CUBIC);
    let r = run(&["bounds", path.to_str().unwrap(), "--k", "1..3"]);
    assert_eq!(r.code, 0, "{}", r.err);
    // d = 4 > m = 2 with n = m + 1: every A_k vanishes.
    for k in 1..=3 {
        assert!(r.out.contains(&format!("k = {k}: b0 <= -inf, td <= -inf  [maximal-minors-bound]")), "{}", r.out);
    }
    let c = run(&["classify", path.to_str().unwrap()]);
    assert!(c.out.contains("[maximal-minors-almost-square-linear-type]"), "{}", c.out);
}
