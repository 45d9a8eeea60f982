use std::path::PathBuf;
use std::process::{Command, Output};

fn loopfold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopfold")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("loopfold-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_list_is_sorted() {
    let o = loopfold(&["verify", "list"]);
    assert!(o.status.success());
    let names: Vec<String> = stdout(&o).lines().map(|l| l.split_whitespace().next().unwrap().to_string()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 13);
}

#[test]
fn verify_run_passes_and_reports() {
    let o = loopfold(&["verify", "run", "psl2_counting", "m11_fusion"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("scenario psl2_counting [fast]: PASS"));
    assert!(out.ends_with("summary: 2/2 scenarios passed\n"));
}

#[test]
fn json_reports_are_byte_identical() {
    let path = scratch("report.json", "");
    let args = ["verify", "run", "folder_search_pgl25", "automizer_chain_m11", "--format", "json"];
    let a = loopfold(&args);
    let b = loopfold(&[&args[..], &["--json", path.to_str().unwrap()]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["scenarios"].as_array().unwrap().len(), 2);
}

#[test]
fn empty_and_over_budget_runs_exit_zero() {
    let o = loopfold(&["verify", "run"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: 0/0"));
    let o = loopfold(&["verify", "run", "m22_bound", "--budget", "fast"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("skipping m22_bound"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(loopfold(&["verify", "run", "no_such_scenario"]).status.code(), Some(2));
    assert_eq!(loopfold(&["verify", "run", "--budget", "glacial"]).status.code(), Some(2));
    assert_eq!(loopfold(&["classes", "Q8x"]).status.code(), Some(2));
    assert_eq!(loopfold(&["folder", "check", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(loopfold(&["folder", "check", scratch("bad.json", "{").to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn failed_outcomes_exit_one() {
    let o = loopfold(&["fsp", "A5xC3", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("possible failure"));
    let spec = scratch("nontransversal.json", r#"{"group":"S3","subgroup_generators":["(1,2)"],"K":["()","(1,2)","(1,3,2)"]}"#);
    assert_eq!(loopfold(&["folder", "check", spec.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn group_commands() {
    let o = loopfold(&["classes", "S4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("S4 of order 24: 5 classes"));

    let o = loopfold(&["structconst", "S4", "2A", "2A", "1A", "--table"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = loopfold(&["structconst", "S4", "2A", "2A", "1A"]);
    assert_eq!(stdout(&o).trim(), "3");

    let o = loopfold(&["commgraph", "A5"]);
    assert!(stdout(&o).starts_with("A5 odd_prime: 44 vertices, 46 edges, 16 components"));

    let o = loopfold(&["fsp", "M11", "11", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["classes"].as_array().unwrap().iter().all(|c| c["certified"] == true));
}

#[test]
fn folder_commands() {
    let spec = scratch("c3.json", r#"{"group":"S3","subgroup_generators":["(1,2)"],"K":["()","(1,2,3)","(1,3,2)"]}"#);
    let o = loopfold(&["folder", "loop", spec.to_str().unwrap()]);
    assert_eq!(stdout(&o), "0 1 2\n1 2 0\n2 0 1\n");
    let o = loopfold(&["folder", "check", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let o = loopfold(&["folder", "search", "PGL2(5)", "--subgroup", "(2,3,6,4,5)", "--subgroup", "(3,4,5,6)", "--pool", "outer:PSL2(5)", "--bol", "--two-power"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("0 folders"));
}

#[test]
fn decompose_command() {
    let o = loopfold(&["decompose", "GU", "6", "--order", "9", "--per-seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failures"));
}
