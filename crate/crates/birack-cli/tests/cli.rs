//! End-to-end tests of the `birack` binary: file round-trips, exit
//! codes, and the verification suites.

use std::path::PathBuf;
use std::process::{Command, Output};

use biracks::construct;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_birack"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_birack(dir: &tempfile::TempDir, name: &str, b: &biracks::Birack) -> PathBuf {
    let n = b.n();
    let table = |t: &[usize]| t.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>();
    let payload = serde_json::json!({
        "n": n,
        "circ": table(b.circ_table()),
        "bullet": table(b.bullet_table()),
    });
    let path = dir.path().join(name);
    std::fs::write(&path, payload.to_string()).unwrap();
    path
}

#[test]
fn check_reports_the_fixture_distributive() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_birack(&dir, "fixture.json", &construct::example6());
    let out = run(&["check", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["valid"], true);
    assert_eq!(report["distributive"], true);
    assert_eq!(report["involutive"], false);
    assert_eq!(report["lmlt"]["order"], 8);
}

#[test]
fn check_rejects_invalid_tables_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // Repeated entry in a bullet column.
    std::fs::write(
        &path,
        r#"{"n":2,"circ":[[0,1],[0,1]],"bullet":[[0,0],[1,0]]}"#,
    )
    .unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["valid"], false);
}

#[test]
fn unreadable_input_is_a_usage_error() {
    let out = run(&["check", "/nonexistent/nowhere.json"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("garbage.json");
    std::fs::write(&path, "not json").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mpl_prints_the_fixture_level() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_birack(&dir, "fixture.json", &construct::example6());
    let out = run(&["mpl", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn mpl_exit_code_signals_non_multipermutation_inputs() {
    // Left derived birack of the dihedral rack on three points.
    let op: Vec<usize> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (2 * x + 3 - y) % 3))
        .collect();
    let rack = biracks::Rack::left_from_table(3, op).unwrap();
    let b = construct::left_derived(&rack).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = write_birack(&dir, "dihedral.json", &b);
    let out = run(&["mpl", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn wada_pipes_into_check_and_groups() {
    let out = run(&["wada", "--group", "Z4xZ2"]);
    assert!(out.status.success());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wada.json");
    std::fs::write(&path, out.stdout).unwrap();

    let checked = run(&["check", path.to_str().unwrap()]);
    assert!(checked.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&checked)).unwrap();
    assert_eq!(report["distributive"], true);
    assert_eq!(report["involutive"], false);

    let groups = run(&["groups", path.to_str().unwrap()]);
    assert!(groups.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&groups)).unwrap();
    assert!(report["lmlt"]["order"].as_u64().unwrap() >= 1);
    assert!(report["mlt"]["abelian"].as_bool().unwrap());
}

#[test]
fn wada_rejects_unknown_groups() {
    let out = run(&["wada", "--group", "F4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn retract_tower_and_steps() {
    let out = run(&["wada", "--group", "Q8"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    std::fs::write(&path, out.stdout).unwrap();

    let tower = run(&["retract", path.to_str().unwrap(), "--kind", "full"]);
    assert!(tower.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&tower)).unwrap();
    assert_eq!(report["sizes"], serde_json::json!([8, 4, 1]));
    assert_eq!(report["level"], 2);

    let stage = run(&[
        "retract",
        path.to_str().unwrap(),
        "--kind",
        "full",
        "--steps",
        "1",
    ]);
    assert!(stage.status.success());
    let birack: serde_json::Value = serde_json::from_str(&stdout(&stage)).unwrap();
    assert_eq!(birack["n"], 4);
}

#[test]
fn retract_left_requires_left_distributivity() {
    let dir = tempfile::tempdir().unwrap();
    // A valid birack that is not right distributive: Wada on Z8.
    let b = construct::wada(&construct::cyclic(8).unwrap());
    let path = write_birack(&dir, "z8.json", &b);
    let out = run(&["retract", path.to_str().unwrap(), "--kind", "right"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn solution_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("solution.json");
    // The solution of the six-element fixture, written in σ/τ form.
    let b = construct::example6();
    let s = biracks::Solution::from_birack(&b);
    let n = b.n();
    let table = |t: &[usize]| t.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>();
    let payload = serde_json::json!({
        "n": n,
        "sigma": table(s.sigma_table()),
        "tau": table(s.tau_table()),
    });
    std::fs::write(&path, payload.to_string()).unwrap();

    let props = run(&["props", path.to_str().unwrap()]);
    assert!(props.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&props)).unwrap();
    assert_eq!(report["distributive"], true);
    assert_eq!(report["derived"], false);

    let mpl = run(&["mpl", path.to_str().unwrap()]);
    assert_eq!(stdout(&mpl).trim(), "3");
}

#[test]
fn enumerate_writes_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("census");
    let out = run(&[
        "enumerate",
        "--n",
        "2",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["count"], 4);
    let mut files: Vec<_> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 4);
    for file in files {
        let checked = run(&["check", file.to_str().unwrap()]);
        assert!(checked.status.success(), "{file:?} must validate");
    }
}

#[test]
fn enumerate_streams_jsonl() {
    let out = run(&["enumerate", "--n", "2", "--distributive"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["distributive"], true);
    }
}

#[test]
fn enumerate_rejects_oversized_carriers() {
    assert_eq!(run(&["enumerate", "--n", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--n", "5", "--distributive"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_suites_run_clean() {
    for (suite, n) in [("bridge", "2"), ("ld-nilp", "2"), ("rack", "3"), ("main", "3")] {
        let out = run(&["verify", "--suite", suite, "--n", n]);
        assert!(out.status.success(), "suite {suite} failed");
        let last = stdout(&out);
        let last = last.lines().last().unwrap();
        let summary: serde_json::Value = serde_json::from_str(last).unwrap();
        assert_eq!(summary["suite"], suite);
    }
}

#[test]
fn group_cap_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_birack(&dir, "fixture.json", &construct::example6());
    // A cap of 4 is below the left multiplication group order (8).
    let out = bin()
        .args(["groups", path.to_str().unwrap()])
        .env("BIRACK_GROUP_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
