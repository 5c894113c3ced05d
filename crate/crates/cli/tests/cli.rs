use std::fs;
use std::process::{Command, Output};

use ganita::sulva::Scene;

fn ganita(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ganita")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn usage_errors_exit_1() {
    for args in [&["bogus"][..], &["solve"], &["partition", "--total", "720", "--frobnicate"], &["calendar", "--days", "many"]] {
        let o = ganita(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).contains("error:"), "{args:?}");
    }
    assert_eq!(ganita(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let eq = dir.path().join("eq.txt");
    fs::write(&eq, "yā 1 = rū 0\nrū 0\n").unwrap();
    let o = ganita(&["solve", "--file", eq.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("anachronistic token"));
    assert!(stderr(&o).contains("line 1, column 6"));

    assert_eq!(ganita(&["proportion", "5:20:8:?"]).status.code(), Some(2));
    assert_eq!(ganita(&["identity", "--x", "three", "--y", "4"]).status.code(), Some(2));
    assert_eq!(ganita(&["approx-diagonal", "--steps", "3", "--unit", "35 furlongs"]).status.code(), Some(2));
    let missing = ganita(&["solve", "--file", dir.path().join("nope.txt").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));

    let cfg = dir.path().join("cal.cfg");
    fs::write(&cfg, "synodic_month_days: 29.5\n").unwrap();
    assert_eq!(ganita(&["calendar", "--days", "10", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let eq = dir.path().join("eq.txt");
    fs::write(&eq, "yāva 1 rū 1\nrū 0\n").unwrap();
    let o = ganita(&["solve", "--file", eq.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("no real root"));
    fs::write(&eq, "yā 2 rū 1\nyā 2 rū 1\n").unwrap();
    assert!(stderr(&ganita(&["solve", "--file", eq.to_str().unwrap()])).contains("indeterminate"));

    let split = ganita(&["partition", "--total", "720", "--split", "7"]);
    assert_eq!(split.status.code(), Some(3));
    assert!(stderr(&split).contains("no equal split exists"));
    assert_eq!(ganita(&["proportion", "0:5::3:?"]).status.code(), Some(3));
    assert_eq!(ganita(&["approx-diagonal", "--steps", "0"]).status.code(), Some(3));
    assert_eq!(ganita(&["construct", "--recipe", "falcon"]).status.code(), Some(3));
    assert_eq!(ganita(&["identity", "--x", "-1", "--y", "4"]).status.code(), Some(3));
    assert_eq!(ganita(&["calendar", "--days", "0"]).status.code(), Some(3));
}

#[test]
fn solve_prints_roots_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let eq = dir.path().join("eq.txt");
    fs::write(&eq, "# worked example\nyāva 0 yā 10 rū 8°\nyāva 1 yā 0 rū 1\n").unwrap();
    let o = ganita(&["solve", "--file", eq.to_str().unwrap(), "--trace"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("normalized: x² − 10x + 9 = 0"));
    assert!(out.contains("(2x − 10)² = 64"));
    assert!(out.contains("x = 9 ≈ 9.000000") && out.contains("x = 1 ≈ 1.000000"));

    let json = ganita(&["solve", "--file", eq.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["trace"].as_array().unwrap().len(), 6);
    assert_eq!(v["trace"][3]["label"], "complete-square");
    let trace: ganita::bija::SolveTrace = serde_json::from_value(v["trace"].clone()).unwrap();
    trace.verify().unwrap();

    fs::write(&eq, "yā 3+\nrū 6\n").unwrap();
    assert!(!ganita(&["solve", "--file", eq.to_str().unwrap()]).status.success());
    let lenient = ganita(&["solve", "--file", eq.to_str().unwrap(), "--lenient"]);
    assert!(stdout(&lenient).contains("x = -2 ≈ -2.000000"));
}

#[test]
fn construct_writes_scene_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("scene.json");
    let svg = dir.path().join("scene.svg");
    for recipe in ganita::sulva::RECIPES {
        let o = ganita(&["construct", "--recipe", recipe, "--out", json.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
        assert!(o.status.success(), "{recipe}: {}", stderr(&o));
        let scene = Scene::from_json(&fs::read_to_string(&json).unwrap()).unwrap();
        assert_eq!(scene, ganita::sulva::recipe(recipe).unwrap());
        let drawing = fs::read_to_string(&svg).unwrap();
        assert!(drawing.starts_with("<svg") && drawing.trim_end().ends_with("</svg>"));
        assert_eq!(drawing.matches("<text").count(), scene.pegs().len());
    }
    let printed = ganita(&["construct", "--recipe", "prachi"]);
    assert!(Scene::from_json(&stdout(&printed)).is_ok());
}

#[test]
fn calendar_report_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cal.cfg");
    fs::write(&cfg, "# an idealized moon\nsynodic_month_days = 30\n").unwrap();
    let o = ganita(&["calendar", "--days", "720", "--config", cfg.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["drops"], 0);
    assert_eq!(v["months"].as_array().unwrap().len(), 24);
    let d = ganita(&["calendar", "--days", "2000"]);
    let report: ganita::calendar::SimulationReport = serde_json::from_slice(&d.stdout).unwrap();
    assert!(report.drops > 0);
    assert_eq!(report.year_lengths.iter().filter(|y| !(365..=366).contains(*y)).count(), 0);
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&ganita(&["proportion", "5:20::8:?"])), "32 ≈ 32.000000\n");
    assert_eq!(stdout(&ganita(&["proportion", "100:5, 12:1::600:?"])), "5/2 ≈ 2.500000\n");
    assert_eq!(stdout(&ganita(&["partition", "--total", "720", "--split", "5"])), "(5, 144)\n");
    assert_eq!(stdout(&ganita(&["partition", "--total", "12"])).lines().count(), 6);
    let id = stdout(&ganita(&["identity", "--x", "3/2", "--y", "4"]));
    assert!(id.contains("X-square: 9/4 ≈ 2.250000"));
    assert!(id.contains("product via squares: 6 ≈ 6.000000 (checks)"));
    let unit = stdout(&ganita(&["approx-diagonal", "--steps", "3", "--unit", "35 ft"]));
    assert!(unit.contains("35/34 in"));
}

#[test]
fn runs_are_deterministic() {
    let a = ganita(&["calendar", "--days", "3000"]);
    let b = ganita(&["calendar", "--days", "3000"]);
    assert_eq!(a.stdout, b.stdout);
}
