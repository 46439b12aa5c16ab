use std::path::Path;
use std::process::{Command, Output};

use hypercomplex::catalog::catalog;
use hypercomplex::controls;
use hypercomplex::instance::InstanceFile;

fn hcverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcverify")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn catalog_list_names_every_entry() {
    let out = hcverify(&["catalog", "list"]);
    assert!(out.status.success());
    for name in ["abelian_h1", "abelian_h2", "qheis_r"] {
        assert!(stdout(&out).contains(name));
    }
}

#[test]
fn shown_catalog_file_round_trips_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let shown = hcverify(&["catalog", "show", "qheis_r"]);
    assert!(shown.status.success());
    let text = stdout(&shown);
    let parsed = InstanceFile::from_json(&text).unwrap().parse().unwrap();
    assert_eq!(parsed, catalog("qheis_r").unwrap());

    let file = write(dir.path(), "qheis.json", &text);
    let json = dir.path().join("report.json");
    let out = hcverify(&["report", &file, "--json", json.to_str().unwrap(), "--seed", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["seed"], 4);
    assert_eq!(report["summary"]["local_holonomy_dim"], 0);
    assert_eq!(report["summary"]["holonomy_in_sl"], true);
    let statuses: Vec<&str> = report["records"].as_array().unwrap().iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert!(statuses.iter().all(|s| *s == "pass" || *s == "experiment"));
}

#[test]
fn zero_denominator_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = catalog("abelian_h1").unwrap().to_file();
    f.i[1][0] = "1/0".into();
    let file = write(dir.path(), "bad.json", &f.to_json().unwrap());
    let out = hcverify(&["verify", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("I[1][0]"));
}

#[test]
fn missing_file_and_unknown_catalog_are_input_errors() {
    assert_eq!(hcverify(&["verify", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(hcverify(&["verify", "catalog:nope"]).status.code(), Some(2));
    assert_eq!(hcverify(&["catalog", "show", "nope"]).status.code(), Some(2));
}

#[test]
fn jacobi_failure_reports_witness_and_skips() {
    let dir = tempfile::tempdir().unwrap();
    let mut f = catalog("abelian_h1").unwrap().to_file();
    let entry = |i, j, k: usize| hypercomplex::instance::BracketEntry { i, j, coeffs: [(k, "1".to_string())].into() };
    f.brackets = vec![entry(1, 2, 3), entry(2, 3, 1), entry(1, 3, 1)];
    let file = write(dir.path(), "jacobi.json", &f.to_json().unwrap());
    let json = dir.path().join("r.json");
    let out = hcverify(&["holonomy", &file, "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let rec = |id: &str| report["records"].as_array().unwrap().iter().find(|r| r["id"] == id).cloned().unwrap();
    assert_eq!(rec("structure.jacobi")["status"], "fail");
    assert_eq!(rec("structure.jacobi")["witness"]["triple"].as_array().unwrap().len(), 3);
    assert_eq!(rec("obata.prerequisites")["status"], "skipped");
    assert_eq!(rec("holonomy.prerequisites")["status"], "skipped");
}

#[test]
fn non_abelian_control_fails_with_experiments() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "hyp.json", &controls::hyperbolic().to_json().unwrap());
    let out = hcverify(&["report", &file]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  structure.abelian"));
    assert!(text.contains("EXPT  canonical.theta_closed"));
    assert!(text.contains("PASS  obata.solve"));
}

#[test]
fn dimension_cap_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "h2.json", &catalog("abelian_h2").unwrap().to_json().unwrap());
    let out = Command::new(env!("CARGO_BIN_EXE_hcverify"))
        .args(["verify", &file])
        .env("HC_MAX_DIM", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
