use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghostcentre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_tmp(name: &str, body: &str) -> String {
    let p = std::env::temp_dir().join(format!("ghostcentre-{}-{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn ghost_of_q1() {
    let o = run(&["ghost", "--algebra", &data("q1.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T = x");
}

#[test]
fn w1_anticentre_is_zero() {
    let o = run(&["anticentre", "--algebra", &data("w1.json"), "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dimension 0"));
}

#[test]
fn suite_passes_on_osp12() {
    let o = run(&["suite", "--algebra", &data("osp12.json")]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 15);
}

#[test]
fn exit_codes() {
    // check failures
    assert_eq!(run(&["ghost", "--builtin", "w1"]).status.code(), Some(1));
    let broken = write_tmp(
        "broken.json",
        r#"{"name":"bad","generators":[{"name":"a","parity":"even"},{"name":"b","parity":"even"},{"name":"c","parity":"even"}],
            "brackets":[{"left":"a","right":"b","result":[{"gen":"c","coeff":"1"}]},
                        {"left":"a","right":"c","result":[{"gen":"a","coeff":"1"}]}]}"#,
    );
    assert_eq!(
        run(&["validate", "--algebra", &broken]).status.code(),
        Some(1)
    );
    // usage and parse errors
    assert_eq!(run(&["centre", "--degree", "2"]).status.code(), Some(2));
    assert_eq!(run(&["centre", "--builtin", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["hc", "E", "--builtin", "sl2"]).status.code(), Some(2));
    assert_eq!(
        run(&["hc", "E*", "--builtin", "sl2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["validate", "--algebra", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    let garbage = write_tmp("garbage.json", "{not json");
    assert_eq!(
        run(&["validate", "--algebra", &garbage]).status.code(),
        Some(2)
    );
    let o = run(&["centre", "--builtin", "q1", "--degree", "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--degree"));
}

fn without_timing(s: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        &[
            "anticentre",
            "--builtin",
            "osp12",
            "--degree",
            "3",
            "--output",
            "json",
        ][..],
        &[
            "singular",
            "--builtin",
            "sl2",
            "--lambda",
            "2",
            "--depth",
            "3",
            "--output",
            "json",
        ][..],
        &[
            "shapovalov",
            "--builtin",
            "osp12",
            "--eta",
            "2*alpha1",
            "--output",
            "json",
        ][..],
    ] {
        let a = stdout(&run(args));
        let b = stdout(&run(args));
        assert_eq!(without_timing(&a), without_timing(&b));
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        let again: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(v, again);
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn computations() {
    let o = run(&["hc", "E*F", "--builtin", "sl2"]);
    assert_eq!(stdout(&o).trim(), "P(F*E + H) = l1");
    let o = run(&["t-poly", "--builtin", "osp12"]);
    assert_eq!(stdout(&o).trim(), "t = 2*l1 + 1");
    let o = run(&["pair", "e", "x", "--builtin", "q1"]);
    assert_eq!(stdout(&o).trim(), "(e|x) = e");
    let o = run(&["vj", "", "--builtin", "q1"]);
    assert!(stdout(&o).contains("v_{} = x"));
    let o = run(&[
        "verma-check",
        "--builtin",
        "osp12",
        "--lambda",
        "3/7",
        "--depth",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("odd component: 13/28"));
    let o = run(&[
        "singular",
        "--builtin",
        "osp12",
        "--lambda",
        "0",
        "--depth",
        "1",
    ]);
    assert!(stdout(&o).contains("weight (-1): y*v"));
    let o = run(&[
        "shapovalov",
        "--builtin",
        "sl2",
        "--eta",
        "alpha1",
        "--lambda",
        "5",
    ]);
    assert!(stdout(&o).contains("det at lambda = 5"));
}
