use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_supermod"));
    c.arg("--quiet").env_remove("SUPERMOD_WORKERS");
    c
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out: Output = bin().args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v, stderr)
}

fn docs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs")
}

fn schema(name: &str) -> jsonschema::Validator {
    let s: Value = serde_json::from_str(&fs::read_to_string(docs().join("schema").join(name)).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

fn emit() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["catalog", "emit", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(rep["passed"].as_bool().unwrap());
    dir
}

fn names(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> =
        fs::read_dir(dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    v.sort();
    v
}

#[test]
fn catalog_matches_golden_files() {
    let dir = emit();
    let golden = docs().join("golden");
    assert_eq!(names(dir.path()), names(&golden));
    assert!(names(&golden).len() >= 9);
    let v = schema("category-file.schema.json");
    for n in names(&golden) {
        let ours = fs::read(dir.path().join(&n)).unwrap();
        assert_eq!(ours, fs::read(golden.join(&n)).unwrap(), "{n} differs from docs/golden");
        let json: Value = serde_json::from_slice(&ours).unwrap();
        assert!(v.is_valid(&json), "{n} violates the schema");
        assert!(!has_float(&json), "{n} has a float");
    }
}

#[test]
fn emitted_files_re_verify() {
    let dir = emit();
    let v = schema("report-file.schema.json");
    for n in names(dir.path()) {
        let (code, rep, _) = run(&["verify", dir.path().join(&n).to_str().unwrap()]);
        assert_eq!(code, 0, "{n}");
        assert!(v.is_valid(&rep));
    }
}

#[test]
fn psu2_10_verifies_and_quotient_passes() {
    let f = docs().join("golden/PSU_2_10.json");
    let (code, rep, _) = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(rep["certificates"]["muger_center"]["verdict"], "super-modular");
    assert_eq!(rep["certificates"]["split"]["split"], false);
    let (code, rep, _) = run(&["quotient", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(rep["certificates"]["nhat"].as_array().unwrap().len(), 3);
    for v in rep["certificates"]["fs_indicators"].as_object().unwrap().values() {
        assert!(v == "1" || v == "-1");
    }
}

#[test]
fn psu2_6_file_has_exact_d1() {
    let f: Value = serde_json::from_str(&fs::read_to_string(docs().join("golden/PSU_2_6.json")).unwrap()).unwrap();
    let polys: Vec<&Value> = f["fpdims"].as_array().unwrap().iter().map(|d| &d["minpoly"]).collect();
    // 1 + √2 is a root of x² − 2x − 1
    assert!(polys.contains(&&serde_json::json!(["-1", "-2", "1"])));
}

#[test]
fn asymmetric_stilde_fails_with_witness() {
    let mut f: Value = serde_json::from_str(&fs::read_to_string(docs().join("golden/PSU_2_6.json")).unwrap()).unwrap();
    f["stilde"]["entries"][0][1][0] = "7".into();
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(&p, f.to_string()).unwrap();
    let (code, rep, _) = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    let checks = rep["verdicts"][0]["checks"].as_array().unwrap();
    let sym = checks.iter().find(|c| c["name"] == "stilde_symmetric").unwrap();
    assert_eq!(sym["status"], "fail");
    assert_eq!(sym["witness"], serde_json::json!([0, 1]));
}

#[test]
fn fusion_only_file_skips_s_checks() {
    let (code, rep, _) = run(&["verify", docs().join("golden/Ising_rules.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    let checks = rep["verdicts"][0]["checks"].as_array().unwrap();
    let skipped: Vec<&Value> = checks.iter().filter(|c| c["status"] == "skipped").collect();
    assert!(skipped.iter().any(|c| c["name"] == "stilde_symmetric"));
    assert!(skipped.iter().all(|c| c["detail"].as_str().unwrap().starts_with("missing data")));
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.json");
    fs::write(&p, "{ not json").unwrap();
    assert_eq!(run(&["verify", p.to_str().unwrap()]).0, 2);
    let mut f: Value = serde_json::from_str(&fs::read_to_string(docs().join("golden/semion.json")).unwrap()).unwrap();
    f["schema_version"] = 99.into();
    fs::write(&p, f.to_string()).unwrap();
    let (code, _, err) = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("schema version"));
    assert_eq!(run(&["verify", "/nonexistent/file.json"]).0, 2);
    assert_eq!(run(&["classify"]).0, 2);
}

#[test]
fn classify_rank_four() {
    let dir = tempfile::tempdir().unwrap();
    let (code, rep, _) = run(&["classify", "--rank", "4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(rep["summary"]["non_split"], 1);
    assert_eq!(rep["summary"]["split"], 2);
    let classes = rep["summary"]["tally"]["4"]["classes"].as_array().unwrap();
    let ns: Vec<&Value> = classes.iter().filter(|c| c["split"] == false).collect();
    assert_eq!(ns[0]["name"], "PSU(2)_6");
    assert_eq!(rep["summary"]["tally"]["2"]["split"], 1);
    let files = names(dir.path());
    assert_eq!(files.len(), 5);
    assert!(files.contains(&"report.json".to_string()));
    for n in files.iter().filter(|n| n.starts_with("rank")) {
        let p = dir.path().join(n);
        let (code, _, _) = run(&["verify", p.to_str().unwrap()]);
        assert_eq!(code, 0, "{n}");
        let f = supermod::schema::CategoryFile::from_json(&fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(f.to_json(), fs::read_to_string(&p).unwrap());
    }
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v["timing_ms"] = 0.into();
        v
    };
    let a = strip(run(&["classify", "--rank", "4"]).1);
    let b = strip(run(&["classify", "--rank", "4"]).1);
    assert_eq!(a.to_string(), b.to_string());
    let a = strip(run(&["spin-profiles", "--max-rank", "11"]).1);
    let b = strip(run(&["spin-profiles", "--max-rank", "11"]).1);
    assert_eq!(a.to_string(), b.to_string());
}

#[test]
fn classify_usage_errors() {
    let (code, _, err) = run(&["classify", "--rank", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("unsupported rank 5"));
    assert_eq!(run(&["classify", "--rank", "4", "--bound", "1"]).0, 2);
}

#[test]
fn spin_profile_table() {
    let (code, rep, _) = run(&["spin-profiles", "--max-rank", "11"]);
    assert_eq!(code, 0);
    let table = rep["certificates"]["table"].as_array().unwrap();
    let row = |t: usize| -> Vec<(u64, u64, u64)> {
        table.iter().find(|r| r["total"] == t).unwrap()["profiles"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (p["c0"].as_u64().unwrap(), p["cv"].as_u64().unwrap(), p["csigma"].as_u64().unwrap()))
            .collect()
    };
    assert_eq!(row(6), vec![(4, 0, 2)]);
    assert_eq!(row(7), vec![(4, 2, 1)]);
    assert_eq!(row(8), vec![(4, 4, 0)]);
    assert_eq!(row(9), vec![(6, 0, 3)]);
    assert_eq!(row(10), vec![(6, 2, 2)]);
    assert_eq!(row(11), vec![(6, 4, 1)]);
    assert!(rep["summary"]["excluded_totals"].as_array().unwrap().contains(&5.into()));
    let deps = rep["dependencies"].as_array().unwrap();
    assert!(deps.iter().any(|d| d.as_str().unwrap().contains("[KLW]")));
}

#[test]
fn spin_profile_small_and_out_of_range() {
    let (code, rep, _) = run(&["spin-profiles", "--max-rank", "5"]);
    assert_eq!(code, 0);
    let five = &rep["certificates"]["table"][3];
    assert_eq!(five["total"], 5);
    assert_eq!(five["excluded"], true);
    assert!(!five["notes"].as_array().unwrap().is_empty());
    let (code, rep, _) = run(&["spin-profiles", "--max-rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(rep["certificates"]["table"].as_array().unwrap().len(), 1);
    let (code, _, err) = run(&["spin-profiles", "--max-rank", "12"]);
    assert_eq!(code, 2);
    assert!(err.contains("c0 ∈ {6, 8}"));
}

#[test]
fn worker_count_from_environment() {
    let out = bin().env("SUPERMOD_WORKERS", "1").args(["classify", "--rank", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin().env("SUPERMOD_WORKERS", "0").args(["classify", "--rank", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quotient_of_non_super_modular_data_fails() {
    let (code, rep, _) = run(&["quotient", docs().join("golden/Fib.json").to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(rep["verdicts"][0]["checks"][0]["name"], "super_modular");
}
