use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fnnn_cli::{RankDoc, SweepDoc};

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn fnn_madm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fnn-madm"))
        .args(args)
        .env_remove("FNN_MADM_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn csv_example() -> String {
    example("engineers.csv").to_str().unwrap().to_owned()
}

#[test]
fn rank_prints_every_step() {
    let o = fnn_madm(&["rank", &csv_example(), "--operator", "fnnwa", "--metric", "hamming", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    for needle in [
        "Normalized decision matrix",
        "Aggregates (fnnwa)",
        "Ideal values",
        "E2           e1         0.8235  0.9286",
        "0.4704",
        "0.5260",
        "0.5180",
        "0.5224",
        "0.5651",
        "Ranking: E5 ≥ E2 ≥ E4 ≥ E3 ≥ E1",
        "Best alternative: E5",
    ] {
        assert!(out.contains(needle), "missing {needle:?} in\n{out}");
    }
}

#[test]
fn json_and_csv_inputs_agree() {
    let a = fnn_madm(&["rank", &csv_example(), "--format", "json"]);
    let b = fnn_madm(&["rank", example("engineers.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn gfnnwa_at_lambda_one_matches_fnnwa() {
    let a = stdout(&fnn_madm(&["rank", &csv_example(), "--operator", "fnnwa"]));
    let b = stdout(&fnn_madm(&["rank", &csv_example(), "--operator", "gfnnwa", "--lambda", "1"]));
    assert_eq!(a, b.replace("gfnnwa", "fnnwa"));
}

#[test]
fn weights_length_mismatch_is_usage_error() {
    let o = fnn_madm(&["rank", &csv_example(), "--weights", "0.5,0.5,0.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("expected 4"), "{}", stderr(&o));
}

#[test]
fn weights_flag_overrides_and_renormalizes() {
    let o = fnn_madm(&["rank", &csv_example(), "--weights", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fnn_madm(&["rank", &csv_example(), "--weights", "1,1,1,1", "--renormalize-weights", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: RankDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.weights, vec![0.25; 4]);
}

#[test]
fn sweep_lists_rows_and_transitions() {
    let o = fnn_madm(&["sweep", &csv_example(), "--lambda-range", "1..34", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: SweepDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.rows.len(), 34);
    let row13 = doc.rows.iter().find(|r| r.lambda == 13.0).unwrap();
    assert_eq!(row13.ordering_labels, ["E5", "E4", "E3", "E2", "E1"]);
    assert_eq!(doc.transitions, vec![2.0, 12.0, 34.0]);

    let table = stdout(&fnn_madm(&["sweep", &csv_example(), "--lambda-range", "1..34"]));
    assert!(table.contains("Ranking transitions: Λ = 2, Λ = 12, Λ = 34"), "{table}");
}

#[test]
fn single_step_sweep_equals_rank() {
    let s = fnn_madm(&["sweep", &csv_example(), "--lambda-range", "5..5", "--format", "json"]);
    let r = fnn_madm(&["rank", &csv_example(), "--lambda", "5", "--format", "json"]);
    let sweep: SweepDoc = serde_json::from_str(&stdout(&s)).unwrap();
    let rank: RankDoc = serde_json::from_str(&stdout(&r)).unwrap();
    assert_eq!(sweep.rows.len(), 1);
    assert_eq!(sweep.rows[0].closeness, rank.closeness);
    assert_eq!(sweep.rows[0].ordering, rank.ordering);
    assert!(sweep.transitions.is_empty());
}

#[test]
fn plot_out_writes_header_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let plot = dir.path().join("plot.csv");
    let o = fnn_madm(&["sweep", &csv_example(), "--lambda-range", "1..3", "--plot-out", plot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&plot).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,D1,D2,D3,D4,D5");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("1,0.47036"));
}

#[test]
fn validate_reports_every_bad_cell() {
    let o = fnn_madm(&["validate", &csv_example()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "20 cells valid\n");

    let dir = tempfile::tempdir().unwrap();
    let one = write_temp(&dir, "xi.csv", "alt,a,b\nX,1;0;0.8;0.5;0.2,0.5;0.5;0.7;0.3;0.3\nweights,0.5,0.5\n");
    let o = fnn_madm(&["validate", &one]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.matches("spread must be positive").count(), 1, "{err}");
    assert!(err.contains("X/a (row 1, column 1)"));

    let two = write_temp(
        &dir,
        "two.csv",
        "alt,a,b\nX,1;0;0.8;0.5;0.2,0.5;0.5;0.95;0.95;0.95\nweights,0.5,0.5\n",
    );
    let err = stderr(&fnn_madm(&["validate", &two]));
    assert!(err.contains("2 invalid cell(s)") && err.contains("exceeds 2"), "{err}");
}

#[test]
fn cubic_boundary_is_inclusive() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "edge.csv", "alt,a\nX,1;1;1;1;0\nY,0.5;0.5;0.5;0.5;0.5\nweights,1\n");
    let o = fnn_madm(&["validate", &p]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(fnn_madm(&["rank", &p]).status.code(), Some(0));
}

#[test]
fn bad_files_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write_temp(&dir, "empty.csv", "");
    let o = fnn_madm(&["rank", &empty]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty"));
    assert_eq!(fnn_madm(&["rank", "/nonexistent/problem.csv"]).status.code(), Some(2));
    let json = write_temp(&dir, "bad.json", "{\"alternatives\": [\"X\"], ");
    assert_eq!(fnn_madm(&["validate", &json]).status.code(), Some(2));
    let cubic = write_temp(&dir, "cubic.csv", "alt,a\nX,1;1;0.95;0.95;0.95\nweights,1\n");
    let o = fnn_madm(&["rank", &cubic]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds 2"));
}

#[test]
fn unknown_extension_needs_input_format() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(example("engineers.csv")).unwrap();
    let p = write_temp(&dir, "problem.txt", &text);
    assert_eq!(fnn_madm(&["validate", &p]).status.code(), Some(1));
    assert_eq!(fnn_madm(&["validate", &p, "--input-format", "csv"]).status.code(), Some(0));
}

#[test]
fn overflow_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "deg.csv", "alt,a\nX,1e-300;1e300;0.5;0.5;0.5\nY,1;1;0.5;0.5;0.5\nweights,1\n");
    let o = fnn_madm(&["rank", &p]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(fnn_madm(&[]).status.code(), Some(1));
    assert_eq!(fnn_madm(&["rank", &csv_example(), "--operator", "owa"]).status.code(), Some(1));
    assert_eq!(fnn_madm(&["sweep", &csv_example(), "--lambda-range", "3..1"]).status.code(), Some(1));
    assert_eq!(fnn_madm(&["rank", &csv_example(), "--lambda", "0"]).status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_fnn-madm"))
        .args(["rank", &csv_example()])
        .env("FNN_MADM_PRECISION", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn precision_env_changes_table_digits() {
    let o = Command::new(env!("CARGO_BIN_EXE_fnn-madm"))
        .args(["rank", &csv_example()])
        .env("FNN_MADM_PRECISION", "2")
        .output()
        .unwrap();
    let out = stdout(&o);
    let row = out.lines().rev().find(|l| l.starts_with("E5 ")).unwrap();
    assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["E5", "0.16", "0.21", "0.57", "1"]);
}

#[test]
fn fractional_lambda_is_flagged() {
    let out = stdout(&fnn_madm(&["rank", &csv_example(), "--lambda", "2.5"]));
    assert!(out.contains("not an integer"));
    let o = fnn_madm(&["rank", &csv_example(), "--lambda", "2.5", "--format", "json"]);
    let doc: RankDoc = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!doc.lambda_in_domain);
}

#[test]
fn csv_report_is_ordered_best_first() {
    let out = stdout(&fnn_madm(&["rank", &csv_example(), "--format", "csv"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "alternative,d_plus,d_minus,closeness,rank");
    assert!(lines[1].starts_with("E5,") && lines[1].ends_with(",1"));
    assert!(lines[5].starts_with("E1,") && lines[5].ends_with(",5"));
}

#[test]
fn output_is_deterministic() {
    let a = fnn_madm(&["sweep", &csv_example(), "--lambda-range", "1..10", "--format", "json"]);
    let b = fnn_madm(&["sweep", &csv_example(), "--lambda-range", "1..10", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
