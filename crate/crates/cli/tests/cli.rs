use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordopt")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ordopt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solves_the_six_path_instance() {
    let out = run(&["solve", "sp", &fixture("six_paths.graph")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "c=(1,0,1) ctilde=(2,1,1) o=(eta1,eta3) path=e4,e5\n\
         c=(0,2,0) ctilde=(2,2,0) o=(eta2,eta2) path=e1,e3\n\
         c=(2,1,0) ctilde=(3,1,0) o=(eta1,eta1,eta2) path=e4,e7,e8\n"
    );
}

#[test]
fn all_efficient_lists_tied_paths() {
    let out = run(&["--all-efficient", "solve", "sp", &fixture("six_paths.graph")]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("path=e6,e8"));
}

#[test]
fn stdin_and_dash_read_the_same_input() {
    let body = std::fs::read_to_string(fixture("small.knap")).unwrap();
    let a = run_stdin(&["solve", "knapsack"], &body);
    let b = run_stdin(&["solve", "knapsack", "-"], &body);
    assert_eq!(stdout(&a), "c=(1,1) chead=(1,2) o=(eta1,eta2) items=i1,i2\n");
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn weighted_and_mixed_models_pick_different_paths() {
    let wtop = stdout(&run(&["solve", "wtop", &fixture("coherent.graph")]));
    assert!(wtop.contains("ctildew=(10,2) path=e1,e2,e3"));
    let mixed = stdout(&run(&["solve", "mixed", &fixture("coherent.graph")]));
    assert!(mixed.trim_end().ends_with("path=e4,e5,e6"));
}

#[test]
fn unreachable_target_is_reported() {
    let text = "GRAPH 3 1\nOBJECTIVES real=0 ordinal=2\nEDGE 1 1 2 1\nSOURCE 1\nTARGET 3\n";
    let out = run_stdin(&["solve", "sp"], text);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "UNREACHABLE\n");
}

#[test]
fn json_output_is_parseable() {
    let out = run(&["--format", "json", "solve", "mixed", &fixture("mixed4.graph")]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["outcomes"].as_array().unwrap().len(), 3);
}

#[test]
fn transform_prints_all_three_images() {
    let out = run(&["transform", "--vectors", &fixture("four.counts")]);
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("c=(3,1,0) ctilde=(4,1,0) chead=(3,4,4)"));
    assert!(lines[3].starts_with("c=(1,0,2) ctilde=(3,2,2)"));
}

#[test]
fn tail_filter_drops_the_dominated_vector() {
    let out = run(&["filter", "--cone", "tail", &fixture("four.counts")]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(!text.contains("id=4"));
}

#[test]
fn weight_space_cells_meet_at_the_centre() {
    let text = stdout(&run(&["wsd", &fixture("six_paths_tails.points")]));
    let cells: Vec<&str> = text.lines().filter(|l| l.starts_with("cell")).collect();
    assert_eq!(cells.len(), 3);
    assert!(cells.iter().all(|c| c.contains("(1/3,1/3,1/3)") && c.contains("(1/6,1/3,1/2)")));
}

#[test]
fn scalarize_normalizes_lambda() {
    let out = run(&["scalarize", "--lambda", "2,2,2", &fixture("six_paths_tails.points")]);
    assert_eq!(stdout(&out), "lambda=(1/3,1/3,1/3) mu=(1/6,1/3,1/2) value=4/3 argmin=1,2,3\n");
}

#[test]
fn oracle_check_agrees_on_random_instances() {
    let out = run(&["oracle-check", "--problem", "knapsack", "--random", "10", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "seed=3\nknapsack agree=10/10\n");
}

#[test]
fn malformed_input_exits_with_one() {
    let out = run_stdin(&["solve", "sp"], "GRAPH 2\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
