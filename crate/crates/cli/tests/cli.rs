use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftmatch"))
        .args(args)
        .env_remove("SHIFTMATCH_MAX_NODES")
        .env_remove("SHIFTMATCH_MAX_MILLIS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const K4: &str = "SHG 1\nn=4 k=2\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn bound_reports_erdos_value() {
    let o = run(&["bound", "--n", "9", "--k", "3", "--t", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("erdos_bound=28"));

    let o = run(&["bound", "--n", "6", "--k", "2", "--t", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["erdos_bound"], "10");
    assert_eq!(v["regime"], "CliqueDominant");
    assert_eq!(v["schema"], 1);
}

#[test]
fn nu_on_k4() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k4.shg", K4);
    let o = run(&["nu", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("nu=2\n"), "{out}");
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn witness_thm1_on_star_plus_edge() {
    let dir = TempDir::new().unwrap();
    let gen = dir.path().join("star.shg");
    let o = run(&[
        "gen",
        "cover",
        "--n",
        "25",
        "--k",
        "2",
        "--t",
        "2",
        "-o",
        gen.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let mut body = std::fs::read_to_string(&gen).unwrap();
    body.push_str("2 3\n");
    let p = write(&dir, "plus.shg", &body);
    let o = run(&[
        "witness",
        p.to_str().unwrap(),
        "--t",
        "2",
        "--mode",
        "thm1",
        "--json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matching"]["entries"].as_array().unwrap().len(), 2);
    assert_eq!(v["case_trace"][0], "HighDegreeVertex");
}

#[test]
fn witness_lemma3_precondition_fails_on_stars() {
    let dir = TempDir::new().unwrap();
    let gen = dir.path().join("stars.shgm");
    run(&[
        "gen",
        "stars",
        "--n",
        "6",
        "--k",
        "2",
        "--t",
        "2",
        "-o",
        gen.to_str().unwrap(),
    ]);
    let o = run(&["witness", gen.to_str().unwrap(), "--mode", "lemma3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("precondition"));
}

#[test]
fn shift_and_compress() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "f.shg", "SHG 1\nn=3 k=2\n1 3\n2 3\n");
    let o = run(&["shift", p.to_str().unwrap(), "--i", "3", "--j", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 2\n"));

    let o = run(&["compress", p.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let doc = v["document"].as_str().unwrap();
    assert!(doc.contains("1 2\n") && doc.contains("1 3\n"), "{doc}");
}

#[test]
fn rainbow_search() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "m.shgm",
        "SHGM 1\nn=4 t=2\nfamily k=2\n1 2\nfamily k=2\n1 3\n3 4\n",
    );
    let o = run(&["rainbow", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rainbow=true"));
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = run(&[
            "verify",
            "--suite",
            "lemma1",
            "--seed",
            "42",
            "--cases",
            "200",
            "-o",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let o = run(&["verify", "--suite", "oracle", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(run(&["bound", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));

    // domain errors
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.shg", "SHG 1\nn=4 k=2\n1 5\n");
    let o = run(&["nu", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex 5 > n=4"));
    assert_eq!(run(&["nu", "/nonexistent/file.shg"]).status.code(), Some(1));
    let p = write(&dir, "k4.shg", K4);
    assert_eq!(
        run(&["shift", p.to_str().unwrap(), "--i", "1", "--j", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn budget_env_var_is_read_and_validated() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "k4.shg", K4);
    let o = Command::new(env!("CARGO_BIN_EXE_shiftmatch"))
        .args(["nu", p.to_str().unwrap()])
        .env("SHIFTMATCH_MAX_NODES", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
