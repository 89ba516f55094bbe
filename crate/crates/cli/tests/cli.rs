use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qtangent"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/v1")
}

/// Compares stdout with a stored report. Set QTANGENT_UPDATE_GOLDEN=1 to
/// rewrite the files instead.
fn check_golden(name: &str, args: &[&str]) {
    let o = run(args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let path = golden_dir().join(name);
    if std::env::var("QTANGENT_UPDATE_GOLDEN").as_deref() == Ok("1") {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, &o.stdout).unwrap();
        return;
    }
    let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert!(want == o.stdout, "{name} differs from the golden report");
}

#[test]
fn golden_reports() {
    check_golden("S3_functions.json", &["classify", "--group", "preset:S3", "--side", "functions"]);
    check_golden("S3_group_algebra.json", &["classify", "--group", "preset:S3", "--side", "group_algebra"]);
    check_golden("Q8_group_algebra.json", &["classify", "--group", "preset:Q8", "--side", "group_algebra"]);
    check_golden("Z4_functions.json", &["classify", "--group", "preset:Z4", "--side", "functions"]);
    check_golden("qsuite_degree2.json", &["qsuite", "--max-degree", "2"]);
}

#[test]
fn classify_s3_functions_writes_two_calculi() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&["classify", "--group", "preset:S3", "--side", "functions", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let calculi = r["calculi"].as_array().unwrap();
    assert_eq!(calculi.len(), 2);
    let dims: Vec<u64> = calculi.iter().map(|c| c["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![3, 2]);
    assert_eq!(r["side"], "functions");
}

#[test]
fn s3_group_algebra_families() {
    let r = json(&run(&["classify", "--group", "preset:S3", "--side", "group_algebra"]));
    let fams: Vec<(u64, String)> = r["calculi"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["dimension"].as_u64().unwrap(), c["parameter_space"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(fams, vec![(1, "CP^0".to_string()), (2, "CP^1".to_string())]);
    let support = &r["calculi"][1]["instantiation"]["lambda_support"];
    assert_eq!(support, &serde_json::json!([["()", "1"], ["(1,2)", "1"]]));
}

#[test]
fn user_lambda_is_used_where_it_survives() {
    let r = json(&run(&["classify", "--group", "preset:S3", "--side", "group_algebra", "--lambda", "()=1;(1,2)=1"]));
    // the sign character kills e + (12), so that row keeps the search result
    assert_eq!(r["calculi"][0]["instantiation"]["source"], "search");
    assert_eq!(r["calculi"][1]["instantiation"]["source"], "user");
    assert_eq!(r["calculi"][1]["instantiation"]["tangent_dimension"], 2);
    let bad = run(&["classify", "--group", "preset:S3", "--side", "functions", "--lambda", "()=1"]);
    assert_eq!(code(&bad), 1);
    let garbled = run(&["classify", "--group", "preset:S3", "--side", "group_algebra", "--lambda", "(1,9)=1"]);
    assert_eq!(code(&garbled), 1);
}

#[test]
fn input_errors_exit_one() {
    let o = run(&["classify", "--group", "/nonexistent/spec.json"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read group spec"));
    assert_eq!(code(&run(&["classify", "--group", "preset:X9"])), 1);
    assert_eq!(code(&run(&["classify", "--group", "preset:S3", "--seed-free"])), 1);
    assert_eq!(code(&run(&["verify", "--group", "preset:S3", "--checks", "nope"])), 1);
    assert_eq!(code(&run(&["qsuite", "--max-degree", "0"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["classify", "--group", "preset:S5", "--cap", "100"])), 1);

    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("g.json");
    std::fs::write(&spec, "{\"degree\": 3, \"generators\": [[[1,2]]").unwrap();
    assert_eq!(code(&run(&["classify", "--group", spec.to_str().unwrap()])), 1);
}

#[test]
fn group_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("g.json");
    std::fs::write(&spec, r#"{"degree":3,"generators":[[[1,2]],[[1,2,3]]]}"#).unwrap();
    let r = json(&run(&["classify", "--group", spec.to_str().unwrap()]));
    assert_eq!(r["order"], 6);
    assert_eq!(r["calculi"].as_array().unwrap().len(), 2);
    std::fs::write(&spec, r#"{"preset":{"family":"symmetric","n":3}}"#).unwrap();
    assert_eq!(json(&run(&["classify", "--group", spec.to_str().unwrap()]))["group"], "S3");
}

#[test]
fn verify_s4_full_suite() {
    let o = run(&["verify", "--group", "preset:S4"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    assert_eq!(r["reports"].as_array().unwrap().len(), 2);
    assert!(r["cross_checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn unstable_tangent_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    std::fs::write(&t, r#"{"side":"functions","elements":["(1,2)=1;()=-1"]}"#).unwrap();
    let o = run(&["verify", "--group", "preset:S3", "--tangent-file", t.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("counterexample: stability failed"));
    let r = json(&o);
    assert_eq!(r["checks"][0]["status"], "fail");

    // the full class tangent passes
    std::fs::write(&t, r#"{"side":"functions","elements":["(1,2)=1;()=-1","(1,3)=1;()=-1","(2,3)=1;()=-1"]}"#).unwrap();
    assert_eq!(code(&run(&["verify", "--group", "preset:S3", "--tangent-file", t.to_str().unwrap()])), 0);

    // not in ker(counit): an input error
    std::fs::write(&t, r#"{"side":"functions","elements":["(1,2)=1"]}"#).unwrap();
    assert_eq!(code(&run(&["verify", "--group", "preset:S3", "--tangent-file", t.to_str().unwrap()])), 1);
}

#[test]
fn check_subset_is_honoured() {
    let r = json(&run(&["verify", "--group", "preset:S3", "--side", "functions", "--checks", "leibniz,ybe"]));
    for c in r["reports"][0]["calculi"].as_array().unwrap() {
        let keys: Vec<&String> = c["verification"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["leibniz", "ybe"]);
    }
}

#[test]
fn qsuite_runs_and_filters() {
    let o = run(&["qsuite"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["checks"].as_array().unwrap().len(), 6);
    let small = json(&run(&["qsuite", "--max-degree", "2", "--check", "qtrace"]));
    assert_eq!(small["checks"][0]["status"], "pass");
    assert!(small["checks"][0]["detail"].as_str().unwrap().contains("degree <= 2"));
    let single = json(&run(&["qsuite", "--check", "qlier"]));
    assert_eq!(single["checks"].as_array().unwrap().len(), 1);
    assert_eq!(single["checks"][0]["check"], "qlier");
}

#[test]
fn formats() {
    let csv = run(&["classify", "--group", "preset:S3", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("group,side,kind,dimension"));
    assert_eq!(text.lines().count(), 3);
    let t = run(&["qsuite", "--check", "consistency", "--format", "text"]);
    assert!(String::from_utf8(t.stdout).unwrap().contains("consistency: pass"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "--group", "preset:A4"][..],
        &["classify", "--group", "preset:D5", "--side", "group_algebra"][..],
        &["qsuite", "--max-degree", "2"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), 0);
        assert!(a.stdout == b.stdout, "{args:?} is not deterministic");
    }
}
