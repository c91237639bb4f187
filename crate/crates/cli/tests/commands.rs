use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn write_config(dir: &TempDir, name: &str, json: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn run(args: &[&str], config: &Path, out: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mover-eater"));
    cmd.args(args).arg("--config").arg(config);
    if let Some(out) = out {
        cmd.arg("--out").arg(out);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const SCENARIO: &str = r#"{"goals": [[0, 0], [4, 0]], "start": [2, 3], "true_goal": 1}"#;

#[test]
fn play_writes_transcript_and_summary() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "play.json", SCENARIO);
    let out = dir.path().join("t.jsonl");
    let o = run(&["play"], &cfg, Some(&out));
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("T=5"), "{text}");
    assert!(text.contains("consumption=(3.5, 1.5)"), "{text}");
    assert!(text.contains("moves=[ambiguous,ambiguous,ambiguous,explicit:1,explicit:1]"));

    let lines: Vec<_> = std::fs::read_to_string(&out).unwrap().lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    let last: serde_json::Value = serde_json::from_str(&lines[4]).unwrap();
    for key in ["t", "mover_action", "move_class", "eater_action", "b1_half", "b2_half", "x", "y"] {
        assert!(last.get(key).is_some(), "missing {key}");
    }
    assert_eq!(last["b1_half"], 7);
    assert_eq!((last["x"].as_i64(), last["y"].as_i64()), (Some(0), Some(0)));
}

#[test]
fn play_from_the_true_goal_is_empty() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "p.json",
        r#"{"goals": [[0, 0], [4, 0]], "start": [0, 0], "true_goal": 1, "b0": [2, 1]}"#,
    );
    let o = run(&["play"], &cfg, Some(&dir.path().join("t.jsonl")));
    assert!(o.status.success());
    assert!(stdout(&o).contains("T=0"));
    assert!(stdout(&o).contains("consumption=(2, 1)"));
}

#[test]
fn play_reports_horizon_exceeded() {
    let dir = TempDir::new().unwrap();
    let ups = vec!["up"; 40].join(",");
    let cfg = write_config(
        &dir,
        "p.json",
        &format!(
            r#"{{"goals": [[0, 0], [4, 0]], "start": [2, 3], "true_goal": 1,
                "mover": "path:[{ups}]", "horizon_cap": 10}}"#
        ),
    );
    let o = run(&["play"], &cfg, Some(&dir.path().join("t.jsonl")));
    assert!(!o.status.success());
    assert!(stderr(&o).contains("horizon"), "{}", stderr(&o));
}

#[test]
fn config_errors_are_reported() {
    let dir = TempDir::new().unwrap();
    for (json, needle) in [
        (r#"{"goals": [[1, 1], [1, 1]], "start": [0, 0], "true_goal": 1}"#, "distinct"),
        (r#"{"goals": [[0, 0], [4, 0]], "start": [0, 0], "true_goal": 3}"#, "goal"),
        (r#"{"goals": [[0, 0], [4, 0]], "b0": [-1, 0], "start": [0, 0], "true_goal": 1}"#, "b0"),
        (r#"{"goals": [[0, 0], [4, 0]], "start": [0, 0], "true_goal": 1, "mover": "teleport"}"#, "teleport"),
        (r#"{"goals": [[0, 0], [4, 0]], "start": [0, 0], "true_goal": 1, "colour": 1}"#, "colour"),
    ] {
        let cfg = write_config(&dir, "bad.json", json);
        let o = run(&["play"], &cfg, Some(&dir.path().join("t.jsonl")));
        assert_eq!(o.status.code(), Some(2), "{json}");
        assert!(stderr(&o).to_lowercase().contains(needle), "{json}: {}", stderr(&o));
    }
}

const MAP: &str = r#"{"goals": [[0, 0], [4, 0]],
    "window": {"x_min": -2, "x_max": 6, "y_min": -4, "y_max": 4}}"#;

#[test]
fn value_map_csv() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "map.json", MAP);
    let out = dir.path().join("vm.csv");
    let boundary = dir.path().join("b.csv");
    let o = run(
        &["value-map", "--simulate", "--boundary", boundary.to_str().unwrap()],
        &cfg,
        Some(&out),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("simulation agrees"));

    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,v1_half,v2_half,ve_half,region,n_a,n_r1,n_r2"));
    let rows: Vec<Vec<i64>> = lines
        .map(|l| {
            l.split(',')
                .enumerate()
                .filter(|(i, _)| *i != 5)
                .map(|(_, f)| f.parse().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), 81);
    assert!(rows.iter().all(|r| r[4] == r[2].min(r[3])));
    assert!(text.contains("\n0,3,6,8,6,R2,3,0,4\n"));
    assert!(std::fs::read_to_string(&boundary).unwrap().starts_with("x,y\n"));

    // byte-stable
    let again = dir.path().join("vm2.csv");
    run(&["value-map"], &cfg, Some(&again));
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn value_map_decimal_and_budget() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "map.json", MAP);
    let out = dir.path().join("vm.csv");
    let o = run(&["value-map", "--decimal"], &cfg, Some(&out));
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("x,y,v1,v2,ve,region,n_a,n_r1,n_r2\n"));
    assert!(text.contains("\n0,3,3,4,3,R2,"));

    let o = run(&["value-map", "--budget", "80"], &cfg, Some(&out));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_map_csv() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "map.json", MAP);
    let o = run(&["classify-map"], &cfg, None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("x,y,region,n_a,n_r1,n_r2\n"));
    assert!(text.contains("\n2,0,R1,0,2,2\n"));
    assert_eq!(text.lines().count(), 82);
}

#[test]
fn compare_paths_table() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "cmp.json",
        r#"{"goals": [[2, 0], [6, 0]], "start": [4, 4], "true_goal": 1, "exaggeration_depth": 1}"#,
    );
    let out = dir.path().join("cmp.csv");
    let o = run(&["compare-paths"], &cfg, Some(&out));
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("equilibrium=4\n"), "{text}");
    assert!(text.contains("explicit_first=5\n"), "{text}");
    assert!(text.contains("exaggeration:1=4.5\n"), "{text}");
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("t,equilibrium,explicit_first,exaggeration\n0,0,0,0\n"));
}

#[test]
fn compare_paths_reports_unavailable_exaggeration() {
    let dir = TempDir::new().unwrap();
    // on the goal row there is no explicit move toward the fake goal
    let cfg = write_config(
        &dir,
        "cmp.json",
        r#"{"goals": [[0, 0], [4, 0]], "start": [6, 0], "true_goal": 1, "exaggeration_depth": 1}"#,
    );
    let o = run(&["compare-paths"], &cfg, Some(&dir.path().join("c.csv")));
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("exaggeration:1 unavailable"), "{}", stdout(&o));
}

#[test]
fn verify_passes_for_the_equilibrium() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "v.json",
        r#"{"goals": [[0, 0], [4, 0]], "window": {"x_min": -1, "x_max": 5, "y_min": -3, "y_max": 3}}"#,
    );
    let out = dir.path().join("r.json");
    let o = run(&["verify", "--slack", "2"], &cfg, Some(&out));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(report["cells"], 49);
    assert_eq!(report["passed"], 49);
}

#[test]
fn verify_flags_the_half_half_eater() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "v.json",
        r#"{"goals": [[0, 0], [4, 0]], "start": [0, 3], "eater": "half_half"}"#,
    );
    let o = run(&["verify"], &cfg, Some(&dir.path().join("r.json")));
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("first failure at (0, 3)"), "{text}");
    assert!(text.contains("witness:"), "{text}");
}

#[test]
fn verify_rejects_empty_window() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "v.json",
        r#"{"goals": [[0, 0], [4, 0]], "window": {"x_min": 3, "x_max": 1, "y_min": 0, "y_max": 0}}"#,
    );
    let o = run(&["verify"], &cfg, None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty"));
}

#[test]
fn verify_is_inconclusive_when_budget_is_tiny() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "v.json", r#"{"goals": [[0, 0], [4, 0]], "start": [2, 5]}"#);
    let o = run(&["verify", "--budget", "3"], &cfg, Some(&dir.path().join("r.json")));
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn seed_is_accepted_and_ignored() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "play.json", SCENARIO);
    let a = run(&["play", "--seed", "1"], &cfg, None);
    let b = run(&["play", "--seed", "99"], &cfg, None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
