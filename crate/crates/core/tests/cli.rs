use std::process::{Command, Output};

fn subembed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subembed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_s4() {
    let o = subembed(&["analyze", "S4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("order: 24"));
    assert!(s.contains("supersolvable: false"));
    assert!(s.contains("subgroups: 30 in 11 classes, 4 normal"));
}

#[test]
fn analyze_selected_props() {
    let o = subembed(&["analyze", "d8 x c3", "--props", "order,supersolvable"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D8 x C3\norder: 24\nsupersolvable: true\n");
}

#[test]
fn check_subgroup_predicates() {
    let o = subembed(&["check-subgroup", "S3", "--gens", "(1 2)", "--predicate", "weakly-s-permutable"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("true"));
    let o = subembed(&["check-subgroup", "S4", "--gens", "(1 2),(3 4)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("weakly-s-supplemented"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(subembed(&["analyze", "no-such-group"]).status.code(), Some(2));
    assert_eq!(subembed(&["verify", "--statement", "nope"]).status.code(), Some(2));
    assert_eq!(subembed(&["check-subgroup", "S3", "--gens", "(1 7)"]).status.code(), Some(2));
    assert_eq!(subembed(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let o = subembed(&["verify", "--statement", "L2.2", "--max-order", "30", "--report", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["summary"][0]["inconsistent"], 0);
    assert!(v.get("timings").is_none());
    let o = subembed(&[
        "verify", "--statement", "L2.2", "--max-order", "30", "--format", "csv", "--report", csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("statement,group,instance,"));
}

#[test]
fn verify_over_a_group_file_directory() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s4.group"), "name: S4\ndegree: 4\ngens: (1 2), (1 2 3 4)\norder: 24\n").unwrap();
    let o = subembed(&["verify", "--statement", "thmB", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("thmB"));
}

#[test]
fn cap_skip_exits_3() {
    let o = subembed(&["verify", "--statement", "L2.2", "--max-order", "1000"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("skipped S3 wr C3"));
}

#[test]
fn lattice_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("a4.dot");
    let o = subembed(&["lattice", "A4", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph \"A4\""));
    assert_eq!(text.matches("[label=").count(), 5);
}

#[test]
fn reproduce_example42() {
    let o = subembed(&["reproduce-example42"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("order 324"));
    assert!(s.contains("3-length 2"));
}

#[test]
fn scan_q13_reports_flags() {
    let o = subembed(&["scan-q13", "--max-order", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("flags: "));
}
