use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use angulator::{bound_quiver, delta_p, iso_check, Angulation, AnnulusConfig, BoundQuiver};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_angulator"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("angulator-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, text: &str) -> String {
    let path = scratch(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const EIGHT_VERTEX: &str = r#"{
  "vertices": ["a", "b", "c", "d", "e", "f", "g", "h"],
  "arrows": [
    {"id": "ha", "src": "h", "dst": "a"}, {"id": "ab", "src": "a", "dst": "b"},
    {"id": "cb", "src": "c", "dst": "b"}, {"id": "dc", "src": "d", "dst": "c"},
    {"id": "de", "src": "d", "dst": "e"}, {"id": "fe", "src": "f", "dst": "e"},
    {"id": "gf", "src": "g", "dst": "f"}, {"id": "gh", "src": "g", "dst": "h"}
  ],
  "relations": [["gh", "ha"], ["dc", "cb"]]
}"#;

const ORIENTED_SQUARE: &str = r#"{
  "vertices": ["0", "1", "2", "3"],
  "arrows": [
    {"id": "a", "src": "0", "dst": "1"}, {"id": "b", "src": "1", "dst": "2"},
    {"id": "c", "src": "2", "dst": "3"}, {"id": "d", "src": "3", "dst": "0"}
  ]
}"#;

#[test]
fn enumerate_counts_and_streams() {
    let o = run(&["enumerate", "--config", "P(2,2,1)", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    let count: usize = stdout(&o).trim().parse().unwrap();
    assert!(count > 0);
    let o = run(&["enumerate", "--config", "P(2,2,1)"]);
    let lines: Vec<_> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), count);
    for line in &lines {
        let a = Angulation::from_json(line).unwrap();
        assert_eq!(a.to_json().to_string(), *line);
    }
}

#[test]
fn enumerate_rejects_small_polygons() {
    let o = run(&["enumerate", "--config", "P(1,2,1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("p >= 2 required"), "{}", stderr(&o));
}

#[test]
fn enumerate_cap_zero_exits_two() {
    let o = run(&["enumerate", "--config", "P(2,2,1)", "--cap", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["enumerate", "--config", "P(2,2,2)", "--cap", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn check_accepts_the_eight_vertex_quiver() {
    let file = write("eight.json", EIGHT_VERTEX);
    let o = run(&["check", &file, "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let (rh, ra) = (
        report["r_h"].as_u64().unwrap(),
        report["r_a"].as_u64().unwrap(),
    );
    assert_eq!(rh % 3, ra % 3);
}

#[test]
fn check_rejects_an_oriented_cycle_without_relations() {
    let file = write("square.json", ORIENTED_SQUARE);
    let o = run(&["check", &file, "--m", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["conditions"]["b"]["passed"], false);
    assert!(!report["conditions"]["b"]["witnesses"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn realize_round_trips_through_files() {
    let file = write("eight-realize.json", EIGHT_VERTEX);
    let out = scratch("eight-angulation.json");
    let o = run(&["realize", &file, "--m", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a = Angulation::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(a.config(), &AnnulusConfig::new(4, 4, 3).unwrap());
    let o = run(&["quiver", out.to_str().unwrap()]);
    let q = BoundQuiver::from_json(&stdout(&o)).unwrap();
    assert!(iso_check(
        &q,
        &BoundQuiver::from_json(EIGHT_VERTEX).unwrap()
    ));
}

#[test]
fn realize_reports_rejections_and_budget_exhaustion() {
    let file = write("square-realize.json", ORIENTED_SQUARE);
    assert_eq!(run(&["realize", &file, "--m", "2"]).status.code(), Some(3));
    let file = write("eight-budget.json", EIGHT_VERTEX);
    assert_eq!(
        run(&["realize", &file, "--m", "3", "--budget", "1"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn render_is_byte_identical_across_runs() {
    let a = delta_p(&AnnulusConfig::new(2, 2, 2).unwrap());
    let file = write("delta.json", &a.to_json().to_string());
    let first = run(&["render", &file]);
    let second = run(&["render", &file]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).starts_with("<svg"));
}

#[test]
fn quiver_json_and_dot() {
    let a = delta_p(&AnnulusConfig::new(3, 2, 1).unwrap());
    let file = write("delta321.json", &a.to_json().to_string());
    let o = run(&["quiver", &file]);
    let q = BoundQuiver::from_json(&stdout(&o)).unwrap();
    assert_eq!(q, bound_quiver(&a));
    let o = run(&["quiver", &file, "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn classify_prints_the_component() {
    let o = run(&["classify", "T2(1,1)", "--config", "P(2,2,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T_p^0[1]");
    let o = run(&["classify", "T2(9,1)", "--config", "P(2,2,2)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_errors_carry_positions() {
    let file = write("broken.json", "{\n  \"vertices\": [\n");
    let o = run(&["check", &file, "--m", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line"), "{}", stderr(&o));
}

#[test]
fn missing_output_directory_is_refused_up_front() {
    let o = run(&[
        "enumerate",
        "--config",
        "P(2,2,1)",
        "--out",
        "/nonexistent/dir/out.jsonl",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hidden_oracle_agrees() {
    let o = run(&[
        "oracle", "crossing", "T2(0,1)", "T3(0,1)", "--config", "P(2,2,2)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "predicate false, oracle false");
}
