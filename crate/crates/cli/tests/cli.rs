//! End-to-end tests driving the compiled binary.

use std::process::Command;

fn planex(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_planex"))
        .args(args)
        .env_remove("PLANEX_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_count_round_trip() {
    let dir = std::env::temp_dir().join(format!("planex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let out = planex(&["gen", "--family", "fn", "--n", "9"]);
    assert!(out.status.success());
    let edgelist = stdout(&out);
    assert!(edgelist.starts_with("9 21\n"));
    let input = dir.join("f9.edges");
    std::fs::write(&input, &edgelist).unwrap();

    let out = planex(&[
        "count",
        "--pattern",
        "p4",
        "--input",
        input.to_str().unwrap(),
        "--oracle",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "306");

    let out = planex(&[
        "gen",
        "--family",
        "fig1b",
        "--format",
        "graph6",
        "--out",
        dir.join("b.g6").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = planex(&[
        "count",
        "--pattern",
        "c4",
        "--format",
        "graph6",
        "--input",
        dir.join("b.g6").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "24");

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_validates_inputs() {
    let out = planex(&["gen", "--family", "octahedron", "--n", "7"]);
    assert!(!out.status.success());
    let out = planex(&["gen", "--family", "fn"]);
    assert!(!out.status.success());
    let out = planex(&["gen", "--family", "fn", "--n", "6", "--stacking", "0"]);
    assert!(!out.status.success());
    let out = planex(&[
        "gen",
        "--family",
        "apollonian",
        "--n",
        "6",
        "--stacking",
        "0,0,0",
    ]);
    assert!(out.status.success());
}

#[test]
fn enum_streams_sorted_graph6() {
    let out = planex(&["enum", "--n", "7"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| l.len() == 1 + 4)); // 21 bits -> 4 body bytes

    let out = planex(&["enum", "--n", "3"]);
    assert!(!out.status.success());
}

#[test]
fn census_emits_all_report_formats() {
    let dir = std::env::temp_dir().join(format!("planex-census-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("rows.json");
    let csv = dir.join("rows.csv");
    let out = planex(&[
        "census",
        "--pattern",
        "p4",
        "--n-min",
        "4",
        "--n-max",
        "7",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let table = stdout(&out);
    assert!(table.contains("pattern"));
    assert!(table.contains("147"));

    let json_body = std::fs::read_to_string(&json).unwrap();
    assert_eq!(json_body.lines().count(), 4);
    let row: serde_json::Value = serde_json::from_str(json_body.lines().last().unwrap()).unwrap();
    assert_eq!(row["n"], 7);
    assert_eq!(row["pattern"], "p4");
    assert_eq!(row["max"], 147);
    assert_eq!(row["matches"], true);
    assert_eq!(row["expected_family"], true);
    assert!(row["extremal"].as_array().unwrap().len() == 1);
    assert!(row["formula"].is_number());

    let csv_body = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_body.starts_with("n,pattern,max,extremal,formula,matches,expected_family\n"));
    assert_eq!(csv_body.lines().count(), 5);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_small_range_honors_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_planex"))
        .args(["verify", "--n-max", "4"])
        .env("PLANEX_THREADS", "2")
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert!(stdout(&out).contains("checks, 0 failed"));

    let out = Command::new(env!("CARGO_BIN_EXE_planex"))
        .args(["verify", "--n-max", "4"])
        .env("PLANEX_THREADS", "zero")
        .output()
        .expect("binary runs");
    assert!(!out.status.success());
}

#[test]
fn count_rejects_malformed_input() {
    let dir = std::env::temp_dir().join(format!("planex-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("bad.edges");
    std::fs::write(&input, "3 1\n1 0\n").unwrap();
    let out = planex(&[
        "count",
        "--pattern",
        "c3",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(!out.status.success());
    std::fs::remove_dir_all(&dir).ok();
}
