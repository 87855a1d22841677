use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use blocktrace::io::{instance_from_json, read_instance};
use blocktrace::Instance;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_blocktrace"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

#[test]
fn gen_output_round_trips_through_case() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let p = path.to_str().unwrap();
    let out = run(&[
        "gen", "--kind", "psd", "--m", "2", "--n", "2", "--seed", "9", "--out", p,
    ]);
    assert!(out.status.success());
    let inst = read_instance(&path).unwrap();
    let again = run(&[
        "gen", "--kind", "psd", "--m", "2", "--n", "2", "--seed", "9",
    ]);
    assert_eq!(
        instance_from_json(&String::from_utf8(again.stdout).unwrap()).unwrap(),
        inst
    );

    let out = run(&["case", "--id", "choi-tr1", "--input", p]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["holds"], true);
    assert!(report["witness"].as_f64().unwrap() >= -1e-8);
}

#[test]
fn ppt_generator_output_passes_horodecki() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let p = path.to_str().unwrap();
    assert!(
        run(&["gen", "--kind", "ppt", "--m", "3", "--n", "2", "--seed", "4", "--out", p])
            .status
            .success()
    );
    assert_eq!(
        run(&["case", "--id", "horodecki-reduction", "--input", p])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn non_ppt_input_is_a_precondition_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    fs::write(&path, golden("matrix_unit_e_n2.json")).unwrap();
    let out = run(&[
        "case",
        "--id",
        "horodecki-reduction",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("PPT"));
}

#[test]
fn integer_input_gives_exact_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    fs::write(&path, r#"{"rows":2,"cols":2,"entries":[[1,0],[0,1]]}"#).unwrap();
    let out = run(&[
        "case",
        "--id",
        "ck-classical",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["witness"].as_f64(), Some(4.0));
    assert_eq!(report["parts"][0]["tolerance_used"].as_f64(), Some(0.0));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"rows\": 2}").unwrap();
    assert_eq!(
        run(&["case", "--id", "ando", "--input", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["case", "--id", "ando", "--input", "/nonexistent/x.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn matrix_unit_e_matches_golden() {
    let out = run(&["gen", "--kind", "matrix-unit-E", "--m", "2", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("matrix_unit_e_n2.json")
    );
}

#[test]
fn invalid_gen_spec_exits_two() {
    assert_eq!(
        run(&["gen", "--kind", "matrix-unit-E", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--kind", "psd", "--m", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--kind", "psd", "--rank", "9"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        run(&["verify", "--cases", "nosuchcase"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--dims", "2y2"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--cases", "psi-not-2-positive", "--trials", "1"])
            .status
            .code(),
        Some(0)
    );
    // The counterexample does not exist with 1x1 blocks; the trial is recorded as an error.
    assert_eq!(
        run(&[
            "verify",
            "--cases",
            "psi-not-2-positive",
            "--dims",
            "2x1",
            "--trials",
            "1"
        ])
        .status
        .code(),
        Some(1)
    );
    let out = run(&["verify", "--trials", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["cases"].as_array().unwrap().is_empty());
}

#[test]
fn verify_text_has_one_line_per_case() {
    let out = run(&[
        "verify",
        "--cases",
        "ando,choi-tr1",
        "--dims",
        "2x2,2x3",
        "--trials",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let fields: Vec<&str> = lines[0].split_whitespace().collect();
    assert_eq!(fields[0], "ando");
    assert_eq!(fields[1], "10");
    assert_eq!(fields[2], "0");
    assert!(fields[3].parse::<f64>().is_ok());
    assert!(fields[4].parse::<u64>().is_ok());
}

#[test]
fn verify_json_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for threads in ["1", "4"] {
        let path = dir.path().join(format!("r{threads}.json"));
        let out = bin()
            .env("BLOCKTRACE_THREADS", threads)
            .args([
                "verify",
                "--dims",
                "2..3x2..3",
                "--trials",
                "6",
                "--seed",
                "7",
                "--format",
                "json",
                "--out",
            ])
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        bodies.push(fs::read(&path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
}

#[test]
fn bad_thread_env_exits_two() {
    let out = bin()
        .env("BLOCKTRACE_THREADS", "zero")
        .args(["list"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_reports_and_exits_zero() {
    let out = run(&[
        "scan", "--dims", "2x2", "--trials", "50", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["violations"], 0);
    assert!(report["dims"][0]["min_lambda_min"].as_f64().unwrap() >= -1e-8);

    let out = run(&["scan", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn identity_residual_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.json");
    let eye = blocktrace::BlockMatrix::new(2, 3, blocktrace::Matrix::identity(6)).unwrap();
    blocktrace::io::write_instance(&path, &Instance::Block(eye)).unwrap();
    let out = run(&[
        "case",
        "--id",
        "open-question-residual",
        "--input",
        path.to_str().unwrap(),
    ]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((report["witness"].as_f64().unwrap() - 2.0).abs() < 1e-10);
}

#[test]
fn list_json_has_all_ids() {
    let out = run(&["list", "--format", "json"]);
    let cases: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cases = cases.as_array().unwrap();
    assert_eq!(cases.len(), 44);
    assert_eq!(cases[18]["id"], "thm42-improved");
}
