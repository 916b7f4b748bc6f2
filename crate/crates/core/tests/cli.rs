use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sidigraph(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sidigraph"));
    cmd.args(args).env_remove("SIDIGRAPH_TOL").env_remove("SIDIGRAPH_OUT");
    cmd
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn validate(report: &Value) {
    let schema: Value = serde_json::from_str(sidigraph::report::REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn table_csv_top_row() {
    let o = run(&mut sidigraph(&["table", "--n", "8", "--category", "even-even", "--format", "csv"]));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("rank,p,sign_p,q,sign_q,energy,branch_p,branch_q"));
    assert!(lines.next().unwrap().starts_with("1,2,+,6,+,6.000000000000,"));
}

#[test]
fn table_json_single_entry() {
    let o = run(&mut sidigraph(&["table", "--n", "6", "--category", "odd-odd", "--format", "json"]));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 1);
}

#[test]
fn table_rejects_small_n() {
    let o = run(&mut sidigraph(&["table", "--n", "5", "--category", "even-even"]));
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn unwritable_output_is_an_error() {
    let o = run(&mut sidigraph(&["table", "--n", "8", "--category", "even-even", "--out", "/nonexistent/dir/t.csv"]));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_tolerance_is_an_error() {
    for tol in ["0", "1e-3", "-1e-9"] {
        let o = run(&mut sidigraph(&["verify", "--n-range", "6..6", "--tolerance", tol]));
        assert_eq!(o.status.code(), Some(2), "tolerance {tol}");
    }
}

#[test]
fn empty_range_exits_2() {
    let o = run(&mut sidigraph(&["verify", "--n-range", "40..6"]));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn minimal_verify_report_validates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&mut sidigraph(&["verify", "--n-range", "6..6", "--out", out.to_str().unwrap()]));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    validate(&v);
    assert_eq!(v["meta"]["n_range"], serde_json::json!([6, 6]));
}

#[test]
fn verify_6_to_40_is_clean_and_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = run(&mut sidigraph(&["verify", "--n-range", "6..40", "--tolerance", "1e-9", "--out", p.to_str().unwrap()]));
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: Value = serde_json::from_slice(&x).unwrap();
    validate(&v);
    assert_eq!(v["summary"]["unexplained_deviations"], 0);
}

#[test]
fn emitted_ledger_reproduces_itself() {
    let dir = tempfile::tempdir().unwrap();
    let ledger = dir.path().join("ledger.json");
    let o = run(&mut sidigraph(&[
        "verify", "--n-range", "6..14", "--out", dir.path().join("r.json").to_str().unwrap(),
        "--emit-ledger", ledger.to_str().unwrap(),
    ]));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&ledger).unwrap()).unwrap();
    assert!(v["groups"].as_array().unwrap().iter().all(|g| g["cause"] == "unclassified"));
}

#[test]
fn tolerance_flag_beats_env() {
    let o = run(sidigraph(&["verify", "--n-range", "6..6", "--tolerance", "1e-10"]).env("SIDIGRAPH_TOL", "5"));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["meta"]["tolerance"], 1e-10);

    let o = run(sidigraph(&["verify", "--n-range", "6..6"]).env("SIDIGRAPH_TOL", "1e-8"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["meta"]["tolerance"], 1e-8);

    let o = run(sidigraph(&["verify", "--n-range", "6..6"]).env("SIDIGRAPH_TOL", "5"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_beats_env() {
    let dir = tempfile::tempdir().unwrap();
    let env_dir = dir.path().join("env");
    fs::create_dir(&env_dir).unwrap();
    let explicit = dir.path().join("explicit.csv");
    let args = ["table", "--n", "8", "--category", "even-even"];

    let o = run(sidigraph(&args).env("SIDIGRAPH_OUT", &env_dir));
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_dir(&env_dir).unwrap().count(), 1);

    let mut with_flag: Vec<&str> = args.to_vec();
    with_flag.extend(["--out", explicit.to_str().unwrap()]);
    let o = run(sidigraph(&with_flag).env("SIDIGRAPH_OUT", &env_dir));
    assert_eq!(o.status.code(), Some(0));
    assert!(Path::new(&explicit).exists());
    assert_eq!(fs::read_dir(&env_dir).unwrap().count(), 1);
}

#[test]
fn extremal_reports_match() {
    let o = run(&mut sidigraph(&["extremal", "--n", "8", "--category", "even-even"]));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("(2,+)(6,+)") && text.contains("(2,-)(2,-)"), "{text}");
    assert_eq!(text.matches("MATCH").count(), 2, "{text}");

    let o = run(&mut sidigraph(&["extremal", "--n", "9", "--category", "mixed", "--format", "json"]));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["min_match"], true);
    assert!((v["min_energy"].as_f64().unwrap() - 2.0).abs() <= 1e-12);
}

#[test]
fn chain_formats_are_deterministic() {
    for format in ["csv", "json", "latex"] {
        let args = ["chain", "--chain-id", "ee-pn-n2-mod8-2-pos", "--n", "18", "--format", format];
        let a = run(&mut sidigraph(&args));
        let b = run(&mut sidigraph(&args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let o = run(&mut sidigraph(&["chain", "--chain-id", "ee-nn-n2", "--n", "10", "--format", "latex"]));
    assert!(stdout(&o).contains("\\boldsymbol{2}"));
}

#[test]
fn chain_without_id_lists_catalog() {
    let o = run(&mut sidigraph(&["chain", "--category", "odd-odd"]));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("oo-")));
}
