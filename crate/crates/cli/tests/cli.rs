use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_hypergruss");

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).env_remove("HYPERGRUSS_THREADS").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn value(stdout: &str) -> f64 {
    let line = stdout.lines().find(|l| l.starts_with("value")).expect("value line");
    line.split_whitespace().nth(1).unwrap().parse().unwrap()
}

#[test]
fn eval_examples() {
    let (code, out) = run(&["eval", "2f1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5"]);
    assert_eq!(code, 0);
    assert!((value(&out) - 1.3862943611).abs() < 1e-10);
    assert!(out.contains("err_estimate") && out.contains("terms_used"));

    let (code, out) = run(&["eval", "1f1", "--b", "2", "--c", "2", "--z", "1"]);
    assert_eq!(code, 0);
    assert!((value(&out) - std::f64::consts::E).abs() < 1e-12);

    let (code, out) = run(&["eval", "genbeta", "--x", "1", "--y", "1", "--alpha", "1", "--beta", "2", "--p", "0"]);
    assert_eq!(code, 0);
    assert!((value(&out) - 1.0).abs() < 1e-13);
}

#[test]
fn eval_both_prints_difference() {
    let args = ["eval", "gchf", "--b", "1", "--c", "2.5", "--alpha", "1", "--beta", "2", "--p", "0.4", "--z", "-3"];
    let (code, out) = run(&[&args[..], &["--method", "both"]].concat());
    assert_eq!(code, 0);
    assert!(out.contains("method        series") && out.contains("method        quadrature"));
    let diff: f64 = out.lines().find(|l| l.starts_with("difference")).unwrap().split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(diff.abs() < 1e-10);
}

#[test]
fn eval_exit_codes() {
    assert_eq!(run(&["eval", "2f1", "--a", "1", "--b", "1", "--c", "2", "--z", "1.5"]).0, 2);
    assert_eq!(run(&["eval", "1f1", "--b", "-1", "--c", "2", "--z", "1"]).0, 2);
    assert_eq!(run(&["eval", "1f1", "--b", "1", "--c", "2", "--z", "9", "--max-terms", "3"]).0, 3);
}

#[test]
fn single_point_grid_has_one_point() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("one.csv");
    let (code, out) = run(&[
        "check", "thm-b", "--a", "1", "--b", "1", "--c-offset", "1", "--alpha", "1", "--beta-offset", "1", "--p",
        "0.5", "--z1", "0.5", "--z2", "0.5", "--z3", "1", "--output", file.to_str().unwrap(), "--format", "csv",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("1 points evaluated (0 skipped of 1)"), "{out}");
    let text = std::fs::read_to_string(&file).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("schema_version,checker,point,name,a,b,c,alpha,beta,p"));
    assert!(lines[1].starts_with("1,thm-b,0,thm-b,"));
}

#[test]
fn certain_failure_exits_one() {
    // The second Theorem I0 bound fails at these arguments.
    let (code, out) = run(&[
        "check", "thm-i0", "--a", "1", "--b", "1", "--c-offset", "1", "--alpha", "1", "--beta-offset", "1", "--p",
        "0", "--z", "0.2", "--z0", "0.6",
    ]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("thm-i0-2: passed 0, uncertain 0, failed 1"), "{out}");
}

#[test]
fn gruss_random_example() {
    let (code, out) = run(&["check", "gruss-random", "--n", "100", "--trials", "1000", "--seed", "42"]);
    assert_eq!(code, 0);
    assert!(out.contains("failed 0"));
}

#[test]
fn json_records_are_ordered_and_versioned() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a.jsonl");
    let (code, _) = run(&[
        "check", "thm-a", "--b", "1:2:2", "--c-offset", "1", "--alpha", "1", "--beta-offset", "1", "--p", "0:1:2",
        "--z", "0.2:0.4:2", "--z0", "0.4", "--output", file.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&file).unwrap();
    let recs: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 16);
    let points: Vec<u64> = recs.iter().map(|r| r["point"].as_u64().unwrap()).collect();
    assert!(points.windows(2).all(|w| w[0] <= w[1]));
    assert!(recs.iter().all(|r| r["schema_version"] == 1));
}

#[test]
fn io_errors_exit_four() {
    let (code, _) = run(&["check", "gruss-random", "--trials", "3", "--output", "/nonexistent/dir/out.jsonl"]);
    assert_eq!(code, 4);
    assert_eq!(run(&["golden", "verify", "--file", "/nonexistent/goldens.txt"]).0, 4);
}

#[test]
fn thread_variable_is_validated() {
    let out = Command::new(BIN).args(["check", "gruss-random", "--trials", "2"]).env("HYPERGRUSS_THREADS", "zero").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_range_is_rejected() {
    assert_ne!(run(&["check", "thm-a", "--z", "0.9:0.1:3"]).0, 0);
}
