use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use idemdrazin::generator::random_idempotent;
use idemdrazin::json::matrix_to_json_string;
use idemdrazin::{classify_pair, drazin_oracle, ConditionClass, PairDocument, Rational, RationalMatrix};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idemdrazin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_pair(dir: &Path, name: &str, p: &RationalMatrix, q: &RationalMatrix, a: i64, b: i64) -> PathBuf {
    let doc = PairDocument::new(p.clone(), q.clone(), Rational::from_integer(a.into()), Rational::from_integer(b.into())).unwrap();
    let path = dir.join(name);
    fs::write(&path, serde_json::to_string(&doc.to_json()).unwrap()).unwrap();
    path
}

fn example_pair() -> (RationalMatrix, RationalMatrix) {
    let p = RationalMatrix::from_int_rows(&[
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ]);
    let q = RationalMatrix::from_int_rows(&[
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1],
    ]);
    (p, q)
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn classify_examples() {
    let dir = TempDir::new().unwrap();
    let (p, q) = example_pair();
    let file = write_pair(dir.path(), "ex.json", &p, &q, 1, -1);
    let out = run(&["classify", "--input", s(&file)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("classes: PQP_P, PQP_PQ\n"), "{}", stdout(&out));

    let p = RationalMatrix::from_int_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 0]]);
    let q = RationalMatrix::from_int_rows(&[[0, 0, 0], [0, 1, 0], [0, 0, 1]]);
    let file = write_pair(dir.path(), "diag.json", &p, &q, 1, 1);
    let out = run(&["classify", "--input", s(&file)]);
    assert!(stdout(&out).contains("classes: COMMUTE, PQP_PQ\n"), "{}", stdout(&out));

    let bad = RationalMatrix::from_int_rows(&[[2, 0], [0, 0]]);
    let file = write_pair(dir.path(), "bad.json", &bad, &RationalMatrix::zeros(2, 2), 1, 1);
    let out = run(&["classify", "--input", s(&file)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("P is not idempotent"));
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, r#"{"P": {"rows": 1, "cols": 1, "entries": [["1/0"]]}}"#).unwrap();
    assert_eq!(code(&run(&["classify", "--input", s(&path)])), 2);
    assert_eq!(code(&run(&["drazin", "--input", "/nonexistent/pair.json"])), 2);
    assert_eq!(code(&run(&["drazin", "--input", s(&path), "--method", "sideways"])), 2);
}

#[test]
fn drazin_of_example_difference() {
    let dir = TempDir::new().unwrap();
    let (p, q) = example_pair();
    let file = write_pair(dir.path(), "ex.json", &p, &q, 1, -1);
    let out = run(&["drazin", "--input", s(&file), "--json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["index"], 2);
    assert_eq!(report["passed"], true);
    let entries = &report["oracle inverse"]["entries"];
    for i in 0..5 {
        for j in 0..5 {
            let expected = if (i, j) == (4, 4) { "-1" } else { "0" };
            assert_eq!(entries[i][j], expected);
        }
    }
    assert_eq!(report["oracle inverse"], report["formula inverse"]);
}

#[test]
fn drazin_without_applicable_class() {
    let dir = TempDir::new().unwrap();
    let (p, q) = (0..)
        .map(|seed| (random_idempotent::<Rational>(4, seed, 2), random_idempotent(4, seed + 1000, 2)))
        .find(|(p, q)| classify_pair(p, q).unwrap().is_empty())
        .unwrap();
    let file = write_pair(dir.path(), "free.json", &p, &q, 1, 1);
    assert_eq!(code(&run(&["drazin", "--input", s(&file), "--method", "formula"])), 3);
    assert_eq!(code(&run(&["drazin", "--input", s(&file), "--method", "oracle"])), 0);
}

#[test]
fn drazin_of_scaled_identity() {
    let dir = TempDir::new().unwrap();
    let file = write_pair(dir.path(), "id.json", &RationalMatrix::identity(3), &RationalMatrix::zeros(3, 3), 5, 1);
    let out = run(&["drazin", "--input", s(&file), "--json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["index"], 0);
    let fifth = RationalMatrix::identity(3).scale(&Rational::new(1.into(), 5.into()));
    let expected: serde_json::Value = serde_json::from_str(&matrix_to_json_string(&fifth)).unwrap();
    assert_eq!(report["formula inverse"], expected);
    assert_eq!(report["oracle inverse"], expected);
}

#[test]
fn scalar_flags_override_document() {
    let dir = TempDir::new().unwrap();
    let (p, q) = example_pair();
    let file = write_pair(dir.path(), "ex.json", &p, &q, 1, 1);
    let out = run(&["drazin", "--input", s(&file), "--a", "-3/2", "--b", "3/2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("a: -3/2\nb: 3/2\n"), "{text}");
    assert!(text.contains("index: 2\n"));
}

#[test]
fn generate_round_trips_through_classify() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("c.json");
    let out = run(&["generate", "--class", "COMMUTE", "--size", "3", "--seed", "7", "--out", s(&out_path)]);
    assert_eq!(code(&out), 0);
    let out = run(&["classify", "--input", s(&out_path)]);
    assert!(stdout(&out).contains("COMMUTE"));

    let out = run(&["generate", "--class", "PQP_P", "--size", "5", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let doc = PairDocument::<Rational>::from_json_str(&stdout(&out)).unwrap();
    assert!(classify_pair(&doc.p, &doc.q).unwrap().contains(&ConditionClass::PqpP));

    assert_eq!(code(&run(&["generate", "--class", "PQP_ZERO", "--size", "1"])), 2);
    assert_eq!(code(&run(&["generate", "--class", "NOPE", "--size", "3"])), 2);
}

#[test]
fn generate_then_drazin_for_every_class() {
    let dir = TempDir::new().unwrap();
    for class in ["PQP_ZERO", "PQP_P", "PQP_Q", "COMMUTE", "PQP_PQ"] {
        for size in 2..=6 {
            for seed in 0..10 {
                let path = dir.path().join(format!("{class}-{size}-{seed}.json"));
                let (size_s, seed_s) = (size.to_string(), seed.to_string());
                let out = run(&["generate", "--class", class, "--size", &size_s, "--seed", &seed_s, "--out", s(&path)]);
                assert_eq!(code(&out), 0);
                let out = run(&["drazin", "--input", s(&path), "--method", "both"]);
                assert_eq!(code(&out), 0, "{class} {size} {seed}\n{}", stdout(&out));
            }
        }
    }
}

#[test]
fn symbolic_examples() {
    let out = run(&["symbolic", "--theorem", "pqp-zero", "--a", "2", "--b", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("result: pass"));

    let out = run(&["symbolic", "--theorem", "pqp-pq-diff", "--a", "1", "--b", "-1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("supplementary X M = X^2: true"));

    let out = run(&["symbolic", "--theorem", "pqp-pq-sum", "--a", "1", "--b", "-1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("branch violation"));

    assert_eq!(code(&run(&["symbolic", "--theorem", "nope", "--a", "1", "--b", "1"])), 2);
}

#[test]
fn verify_candidates() {
    let dir = TempDir::new().unwrap();
    let (p, q) = example_pair();
    let pair = write_pair(dir.path(), "ex.json", &p, &q, 1, -1);
    let oracle = drazin_oracle(&(&p - &q)).unwrap();
    let cand = dir.path().join("cand.json");
    fs::write(&cand, matrix_to_json_string(&oracle.inverse)).unwrap();

    let out = run(&["verify", "--input", s(&pair), "--candidate", s(&cand), "--k", "2"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    // One below the true index: only the power identity fails.
    let out = run(&["verify", "--input", s(&pair), "--candidate", s(&cand), "--k", "1", "--json"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let flags: Vec<bool> = report["checks"].as_array().unwrap().iter().map(|c| c["passed"].as_bool().unwrap()).collect();
    assert_eq!(flags, [true, true, false]);
    assert!(report["checks"][2]["witness"].is_object());

    let inv = write_pair(dir.path(), "inv.json", &RationalMatrix::identity(2), &RationalMatrix::zeros(2, 2), 2, 1);
    let zero = dir.path().join("zero.json");
    fs::write(&zero, matrix_to_json_string(&RationalMatrix::zeros(2, 2))).unwrap();
    let out = run(&["verify", "--input", s(&inv), "--candidate", s(&zero), "--k", "0"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("check candidate BAB = B: pass"));
    assert!(text.contains("check candidate AB = BA: pass"));
    assert!(text.contains("check candidate AB = I: FAIL"), "{text}");

    let wrong = dir.path().join("wrong.json");
    fs::write(&wrong, matrix_to_json_string(&RationalMatrix::zeros(3, 3))).unwrap();
    assert_eq!(code(&run(&["verify", "--input", s(&inv), "--candidate", s(&wrong), "--k", "0"])), 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let (p, q) = example_pair();
    let file = write_pair(dir.path(), "ex.json", &p, &q, 2, 3);
    let first = run(&["drazin", "--input", s(&file)]);
    let second = run(&["drazin", "--input", s(&file)]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!stdout(&first).contains("time"));
    let timed = run(&["drazin", "--input", s(&file), "--timing"]);
    assert!(stdout(&timed).contains("time: "));
}
