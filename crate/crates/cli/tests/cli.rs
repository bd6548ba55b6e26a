//! End-to-end tests of the binary: fixtures, exit codes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn ktab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("writable temp dir");
    path.to_string_lossy().into_owned()
}

#[test]
fn expand_hall_littlewood_dual_fixture() {
    let out = ktab(&["expand", "--family", "hl", "--mu", "1,1", "--basis", "g"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"basis\":\"g\",\"terms\":[{\"partition\":[1],\"poly\":[-1]},{\"partition\":[2],\"poly\":[0,1]},{\"partition\":[1,1],\"poly\":[1]}]}\n"
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "expand", "--family", "stanley", "--sigma", "4,3,2,1", "--basis", "G", "--cutoff", "8",
    ];
    let first = ktab(&args);
    let second = ktab(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_reports_ok_and_exits_zero() {
    let out = ktab(&[
        "verify", "--family", "lr", "--mu", "2,1", "--nu", "1", "--vars", "4", "--deg", "5",
        "--cutoff", "6", "--format", "table",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "OK\n");
}

#[test]
fn count_objects() {
    let out = ktab(&[
        "count", "--object", "svt", "--shape", "2,1", "--ev", "1,1,1", "--format", "table",
    ]);
    assert_eq!(stdout(&out), "2\n");

    let out = ktab(&[
        "count",
        "--object",
        "svt-by-content",
        "--size",
        "2",
        "--max-letter",
        "2",
    ]);
    assert_eq!(stdout(&out), "{\"count\":5}\n");

    let out = ktab(&[
        "count",
        "--object",
        "strict-elegant",
        "--outer",
        "1,1,1",
        "--inner",
        "1",
        "--format",
        "table",
    ]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn identity_checks() {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = ktab(&["identity", "--check", "hl-sum", "--mu", "2,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"ok\":true"));

    let row = write(dir.path(), "row.json", "[[1,1,2]]");
    let out = ktab(&["identity", "--check", "class-sum", "--tableau", &row]);
    assert!(out.status.success());

    let column = write(dir.path(), "column.json", "[[1],[2]]");
    let out = ktab(&["identity", "--check", "class-sum", "--tableau", &column]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"expected\":[]"));
}

#[test]
fn bijections_round_trip_through_files() {
    let dir = tempfile::tempdir().expect("temp dir");
    let tableau = write(dir.path(), "t.json", "[[1],[2]]");
    let svt = write(dir.path(), "s.json", "[[[1,2]]]");

    let out = ktab(&[
        "bijection",
        "--map",
        "svt-to-filling",
        "--tableau",
        &tableau,
        "--input",
        &svt,
    ]);
    assert!(out.status.success());
    let filling = stdout(&out);
    assert_eq!(
        filling.trim(),
        "{\"outer\":[1,1],\"inner\":[1],\"entries\":[[2,1,1]],\"strict\":true}"
    );

    let filling_path = write(dir.path(), "f.json", filling.trim());
    let out = ktab(&[
        "bijection",
        "--map",
        "filling-to-svt",
        "--tableau",
        &tableau,
        "--input",
        &filling_path,
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[[[1,2]]]");

    let single = write(dir.path(), "one.json", "[[1]]");
    let rpp = write(dir.path(), "r.json", "[[1],[1]]");
    let out = ktab(&[
        "bijection",
        "--map",
        "rpp-to-filling",
        "--tableau",
        &single,
        "--input",
        &rpp,
    ]);
    assert!(out.status.success());
    let filling = stdout(&out);
    let filling_path = write(dir.path(), "fr.json", filling.trim());
    let out = ktab(&[
        "bijection",
        "--map",
        "filling-to-rpp",
        "--tableau",
        &single,
        "--input",
        &filling_path,
    ]);
    assert_eq!(stdout(&out).trim(), "[[1],[1]]");
}

#[test]
fn model_files_round_trip() {
    let dir = tempfile::tempdir().expect("temp dir");
    let model = write(
        dir.path(),
        "model.json",
        r#"{"alphabet_bound":2,"content_size":2,
            "tableaux":[{"rows":[[1,2]],"weight":[0,1]},{"rows":[[1],[2]],"weight":[1]}]}"#,
    );
    let from_file = ktab(&[
        "expand", "--family", "file", "--model", &model, "--basis", "g",
    ]);
    let direct = ktab(&["expand", "--family", "hl", "--mu", "1,1", "--basis", "g"]);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, direct.stdout);

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"alphabet_bound":2,"content_size":1,
            "tableaux":[{"rows":[[1]],"weight":[1]},{"rows":[[1,2]],"weight":[1]}]}"#,
    );
    let out = ktab(&[
        "expand", "--family", "file", "--model", &bad, "--basis", "s",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .expect("utf8")
        .contains("error"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ktab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        ktab(&["expand", "--family", "hl", "--basis", "g"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ktab(&["expand", "--family", "hl", "--mu", "1,2", "--basis", "g"])
            .status
            .code(),
        Some(2),
        "non-partition input is a usage error"
    );
}
