//! The `fmrep` binary: outputs, determinism and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use fmrep::report::RunReport;

fn fmrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmrep")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fmrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn run_catalog_entry() {
    let out = fmrep(&["run", "--group", "S4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("classes      4"));
    assert!(text.contains("atoms        4"));
    assert!(text.contains("factorial    true"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let a = fmrep(&["run", "--group", "S6", "--json"]);
    let b = fmrep(&["run", "--group", "S6", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report = RunReport::from_json(&String::from_utf8(a.stdout).unwrap()).unwrap();
    let v = report.verdicts.unwrap();
    assert_eq!(v.atom_count, 7);
    assert!(!v.half_factorial);
}

#[test]
fn out_file_round_trips() {
    let path = scratch("s9.json", "");
    let out = fmrep(&["run", "--group", "S9", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = RunReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.fusion.class_count, 5);
    assert_eq!(report.verdicts.as_ref().unwrap().atom_count, 6);
    assert_eq!(RunReport::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn generator_file_and_partition_file() {
    let gens = scratch("heis.txt", "degree 25\n# 5^(1+2) on F_5^2\n");
    let entry = fmrep::catalog::find("Heis5").unwrap();
    let lines: Vec<String> = entry.generators.iter().map(|g| g.to_string()).collect();
    std::fs::write(&gens, format!("degree 25\n{}\n", lines.join("\n"))).unwrap();

    let fusion = fmrep(&["run", "--group", gens.to_str().unwrap(), "--prime", "5", "--mode", "fusion", "--json"]);
    assert_eq!(fusion.status.code(), Some(0), "{}", String::from_utf8_lossy(&fusion.stderr));
    let report = RunReport::from_json(&String::from_utf8(fusion.stdout).unwrap()).unwrap();
    let k = report.sylow.classes.len();
    assert_eq!(k, 29);

    let blocks = format!("[[1],[{}]]", (2..=k).map(|i| i.to_string()).collect::<Vec<_>>().join(","));
    let part = scratch("heis-partition.json", &blocks);
    let full = fmrep(&[
        "run",
        "--group",
        gens.to_str().unwrap(),
        "--prime",
        "5",
        "--partition",
        part.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(full.status.code(), Some(0), "{}", String::from_utf8_lossy(&full.stderr));
    let report = RunReport::from_json(&String::from_utf8(full.stdout).unwrap()).unwrap();
    let v = report.verdicts.unwrap();
    assert!(v.transitive && v.factorial);
    assert_eq!(report.atoms.unwrap()[1].dimension, 124);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(fmrep(&["run", "--group", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(fmrep(&["run", "--group", "S4", "--prime", "6"]).status.code(), Some(2));
    let bad = scratch("bad.txt", "(1,2\n");
    assert_eq!(fmrep(&["run", "--group", bad.to_str().unwrap(), "--prime", "2"]).status.code(), Some(2));
    let part = scratch("bad-partition.json", "[[1,2],[3],[4],[5]]");
    let out = fmrep(&["run", "--group", "D8", "--partition", part.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let out = fmrep(&["run", "--group", "M10", "--conjugacy-cap", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn verify_reports_mismatch_with_exit_4() {
    let ok = fmrep(&["verify", "--tier", "fast"]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stdout));

    let catalog = scratch(
        "catalog.txt",
        "group S4\nprime 2\ntier fast\norder 24\ndegree 4\nexpect classes=4 atoms=5\ngen (1,2,3,4)\ngen (1,2)\nend\n",
    );
    let out = fmrep(&["verify", "--catalog", catalog.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(4));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let m = &summary["entries"][0]["mismatches"][0];
    assert_eq!(m["field"], "atoms");
    assert_eq!(m["expected"], "5");
    assert_eq!(m["found"], "4");
}

#[test]
fn catalog_list_names_everything() {
    let out = fmrep(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), fmrep::catalog::catalog().len());
    assert!(text.contains("PSU3_5"));
}
