use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bktab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bktab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

const TYPE_C_INPUT: &str = r#"{"kind":"king","rows":[[3,3,2],[3,2,0],[3,0],[2,0],[1],[1]]}"#;
const TYPE_C_OUTPUT: &str = r#"{"kind":"king","rows":[[3,3,2,0,0,0],[3,2,1,0,0],[3,1,0,0],[2,0,0],[1,0],[1]]}"#;

#[test]
fn enumerate_counts() {
    for (args, want) in [
        (["--type", "king", "--n", "2", "--shape", "1,1"], "5"),
        (["--type", "ssyt", "--n", "1", "--shape", "3"], "1"),
        (["--type", "orthogonal", "--n", "1", "--shape", "1"], "3"),
        (["--type", "orthogonal", "--n", "2", "--shape", ""], "1"),
    ] {
        let o = bktab(&[&["enumerate"], &args[..], &["--format", "count"]].concat());
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn enumerate_json_streams_documents() {
    let o = bktab(&["enumerate", "--type", "ssyt", "--n", "2", "--shape", "2,1", "--format", "json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.contains(r#""kind":"ssyt""#)));
    let o = bktab(&["enumerate", "--type", "king", "--n", "1", "--shape", "1", "--format", "json", "--patterns"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn polynomials() {
    let o = bktab(&["poly", "--family", "symplectic", "--n", "1", "--shape", "1"]);
    assert_eq!(stdout(&o).trim(), "x1 + x1^-1");
    let o = bktab(&["poly", "--family", "orthogonal", "--n", "1", "--shape", "1"]);
    assert_eq!(stdout(&o).trim(), "x1 + 1 + x1^-1");
    let o = bktab(&["poly", "--family", "schur", "--n", "3", "--shape", "2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mass: i64 = v["terms"].as_array().unwrap().iter().map(|t| t["coef"].as_i64().unwrap()).sum();
    assert_eq!(mass, 8);
}

#[test]
fn type_c_involution_and_trace() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.json", TYPE_C_INPUT);
    let o = bktab(&["bk", "--kind", "c", "--j", "2", &input]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), TYPE_C_OUTPUT);

    let image = write(&dir, "image.json", &stdout(&o));
    let back = bktab(&["bk", "--kind", "c", "--j", "2", &image]);
    assert_eq!(
        stdout(&back).trim(),
        r#"{"kind":"king","rows":[[3,3,2,0,0,0],[3,2,0,0,0],[3,0,0,0],[2,0,0],[1,0],[1]]}"#
    );

    let traced = bktab(&["bk", "--kind", "c", "--j", "2", &input, "--trace"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&traced)).unwrap();
    assert_eq!(v["trace"].as_array().unwrap().len(), 4);
    assert_eq!(v["trace"][3]["rows"][2], serde_json::json!([3, 2, 1, 0]));
    assert_eq!(serde_json::to_string(&v["result"]).unwrap(), TYPE_C_OUTPUT);
}

#[test]
fn type_a_and_type_b() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.json", r#"{"kind":"gt","rows":[[13,9,4,0],[10,5,3],[7,3],[4]]}"#);
    let o = bktab(&["bk", "--kind", "a", "--j", "3", &input]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"][1], serde_json::json!([12, 6, 0]));

    let sot = write(&dir, "b.json", r#"{"kind":"orthogonal","n":2,"rows":[["1","1b","inf"],["2","2b"]]}"#);
    let o = bktab(&["bk", "--kind", "b", "--j", "0", &sot]);
    assert!(o.status.success());
    let once = write(&dir, "b1.json", &stdout(&o));
    let twice = bktab(&["bk", "--kind", "b", "--j", "0", &once]);
    assert!(stdout(&twice).contains(r#"["1","1b","inf"]"#));
}

#[test]
fn text_rendering() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.json", TYPE_C_INPUT);
    let o = bktab(&["convert", &input, "--format", "text"]);
    let text = stdout(&o);
    assert!(text.starts_with("+----+"), "{text}");
    assert!(text.contains("| 2b |"));
    let o = bktab(&["bk", "--kind", "c", "--j", "2", &input, "--format", "text"]);
    assert!(stdout(&o).starts_with("3   3   2"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "in.json", TYPE_C_INPUT);
    // j out of range is a usage error
    assert_eq!(bktab(&["bk", "--kind", "c", "--j", "3", &input]).status.code(), Some(2));
    assert_eq!(bktab(&["enumerate", "--type", "nope", "--n", "1", "--shape", "1"]).status.code(), Some(2));
    assert_eq!(bktab(&["enumerate", "--type", "king", "--n", "1", "--shape", "1,1"]).status.code(), Some(2));
    // invalid input is exit 1
    let bad = write(&dir, "bad.json", r#"{"kind":"gt","rows":[[1,0],[2]]}"#);
    assert_eq!(bktab(&["bk", "--kind", "a", "--j", "1", &bad]).status.code(), Some(1));
    assert_eq!(bktab(&["bk", "--kind", "b", "--j", "0", &input]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(bktab(&["convert", missing.to_str().unwrap()]).status.code(), Some(1));
    assert!(!Path::new(&missing).exists());
}

#[test]
fn verify_reports() {
    for check in ["involution", "sum-identity", "character", "lemma44", "locality", "weight-action", "symmetry"] {
        let o = bktab(&["verify", "--check", check, "--n", "2", "--max-size", "4"]);
        assert_eq!(o.status.code(), Some(0), "{check}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["check"], check);
        assert_eq!(v["passed"], true);
        assert!(v["corpus_size"].as_u64().unwrap() > 0);
        assert!(v["counterexample"].is_null());
    }
    let o = bktab(&["verify", "--check", "detrop", "--n", "3", "--seed", "11", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let a = bktab(&["verify", "--check", "detrop", "--n", "3", "--seed", "11", "--samples", "20"]);
    let strip = |s: String| s.split(r#""elapsed_ms""#).next().unwrap().to_string();
    assert_eq!(strip(stdout(&o)), strip(stdout(&a)));
    assert_eq!(bktab(&["verify", "--check", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_involution_at_desk_scale() {
    let o = bktab(&["verify", "--check", "involution", "--n", "3", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
