use std::path::PathBuf;
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn reflaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflaut"))
        .args(args)
        .arg("--data-dir")
        .arg(data_dir())
        .env_remove("REFLAUT_DATA_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_writes_json() {
    let path = std::env::temp_dir().join(format!("reflaut-psl2-9-{}.json", std::process::id()));
    let out = reflaut(&["analyze", "--group", "PSL2:9", "--prime", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(json["k"]["m"], 2);
    assert_eq!(json["order_gamma"], 2);
    assert_eq!(json["identification"], "cyclic-8");
}

#[test]
fn table_matches_every_row() {
    let out = reflaut(&["table"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for name in ["M11", "M23", "HS.2", "J2.2", "J1"] {
        let line = text.lines().find(|l| l.starts_with(name)).expect(name);
        assert!(line.contains(" yes "), "{line}");
    }
}

#[test]
fn glsearch_reports_the_group() {
    let out = reflaut(&["glsearch", "--p", "11", "--target", "600"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("found: irreducible reflection group of order 600 in GL₂(F_11)"));
}

#[test]
fn weyl_requires_the_maximal_twist() {
    let ok = reflaut(&["weyl", "--type", "A2", "--q", "2", "--prime", "7", "--twist", "coxeter"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = reflaut(&["weyl", "--type", "A2", "--q", "2", "--prime", "7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("invariant failed"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(reflaut(&["analyze", "--group", "Foo:3", "--prime", "3"]).status.code(), Some(2));
    assert_eq!(reflaut(&["analyze", "--group", "Sym:5", "--prime", "4"]).status.code(), Some(2));
    assert_eq!(reflaut(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn products_are_analyzed_per_factor() {
    let out = reflaut(&["analyze", "--group", "M11*Alt:7", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("(trivial: false)"));
}
