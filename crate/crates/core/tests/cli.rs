use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn contactcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contactcheck"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn list_names_every_scenario() {
    let o = contactcheck(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for name in ["top-power", "disk-pullback", "handlebody", "levine-criterion"] {
        assert!(text.contains(name), "{name} missing from\n{text}");
    }
    assert_eq!(text.lines().count(), 14);
}

#[test]
fn verify_exit_codes() {
    let o = contactcheck(&["verify", "--scenario", "top-power", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("PASS top-power n=3"));
    assert!(!stdout(&o).contains('\x1b'));

    let o = contactcheck(&["verify", "--scenario", "top-power", "--n", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("99"));

    let o = contactcheck(&["verify", "--scenario", "no-such-thing"]);
    assert_eq!(o.status.code(), Some(2));

    let o = contactcheck(&["verify", "--scenario", "pi1-m0", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = contactcheck(&["verify", "--scenario", "pi1-m0", "--control"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness:"));

    let o = contactcheck(&["verify"]);
    assert_eq!(o.status.code(), Some(2));
    let o = contactcheck(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_json() {
    let o = contactcheck(&["verify", "--scenario", "handlebody", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["scenario"], "handlebody");
    assert_eq!(v["params"]["n"], 3);
    assert_eq!(v["status"], "pass");
    assert!(v["witness"].is_null());
    assert!(!v["axioms_used"].as_array().unwrap().is_empty());
}

#[test]
fn unsafe_n_lifts_the_cap() {
    let o = contactcheck(&["verify", "--scenario", "handlebody", "--n", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = contactcheck(&["verify", "--scenario", "handlebody", "--n", "7", "--unsafe-n"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn report_all() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = contactcheck(&["report", "--all", "--n-max", "3", "--out", out.to_str().unwrap()]);
    // disk-pullback fails, so the run as a whole fails
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let results = v["results"].as_array().unwrap();
    let runs = |name: &str| results.iter().filter(|r| r["scenario"] == name).count();
    assert_eq!(runs("top-power"), 2);
    assert_eq!(runs("weinstein"), 3);
    assert_eq!(runs("pi1-m0"), 1);
    assert_eq!(v["summary"]["fail"], 1);
    assert_eq!(v["summary"]["pass"].as_u64().unwrap() as usize, results.len() - 1);
    let failed: Vec<&Value> = results.iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(failed[0]["scenario"], "disk-pullback");
    assert!(failed[0]["witness"].is_string());
    for r in results {
        assert!(r["elapsed_ms"].is_u64());
        assert!(r["params"].is_object());
    }
    assert!(v["version"].is_string());

    let o = contactcheck(&["report"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn snf_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m.txt", "# 2x2\n2 2\n2 4\n6 8\n");
    let o = contactcheck(&["snf", "--input", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("invariant factors: 2 4\n"), "{text}");
    assert!(text.contains("S:\n2 2\n2 0\n0 4\n"), "{text}");

    let bad = write(dir.path(), "bad.txt", "2 2\n1 2 x 4\n");
    let o = contactcheck(&["snf", "--input", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = contactcheck(&["snf", "--input", "/nonexistent/m.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn homology_from_file() {
    let dir = tempfile::tempdir().unwrap();
    // RP^2 cellular chain complex: 1 <-0- 1 <-2- 1
    let f = write(
        dir.path(),
        "rp2.json",
        r#"{"dims": [1, 1, 1], "boundaries": [
            {"rows": 1, "cols": 1, "entries": [0]},
            {"rows": 1, "cols": 1, "entries": [2]}]}"#,
    );
    let o = contactcheck(&["homology", "--input", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H_0 = Z\nH_1 = Z/2\nH_2 = 0\n");

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"dims": [1, 1, 1], "boundaries": [
            {"rows": 1, "cols": 1, "entries": [1]},
            {"rows": 1, "cols": 1, "entries": [1]}]}"#,
    );
    let o = contactcheck(&["homology", "--input", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degree 2"), "{}", stderr(&o));
}

#[test]
fn pi1_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m0.txt", "gens: a b c\nrel: a b a^-1 b^-1 c^-1\n");
    let o = contactcheck(&["pi1", "--input", &f, "--simplify", "--abelianize"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# free of rank 2"), "{text}");
    assert!(text.contains("# abelianization: Z^2"), "{text}");

    let o = contactcheck(&["pi1", "--input", &f]);
    assert!(stdout(&o).contains("a b a^-1 b^-1 c^-1"));

    let bad = write(dir.path(), "bad.txt", "gens: a\nrel: b\n");
    let o = contactcheck(&["pi1", "--input", &bad]);
    assert_eq!(o.status.code(), Some(2));
}
