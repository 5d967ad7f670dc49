use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ncentered::cli::MatrixFile;
use ncentered::decomp::penrose_check;
use ncentered::linalg::approx_equal;
use ncentered::random::{self, trial_rng};
use ncentered::{Operator, ToleranceConfig};
use serde_json::Value;
use tempfile::TempDir;

fn ncentered(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncentered"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn records(output: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("each line is JSON"))
        .collect()
}

fn verdict(records: &[Value]) -> &Value {
    records.iter().find(|r| r["record"] == "verdict").expect("verdict record")
}

fn summary(records: &[Value]) -> &Value {
    &records.iter().find(|r| r["record"] == "summary").expect("summary record")["summary"]
}

fn check<'a>(records: &'a [Value], name: &str) -> &'a Value {
    records
        .iter()
        .find(|r| r["record"] == "check" && r["name"] == name)
        .unwrap_or_else(|| panic!("no check named {name}"))
}

fn write_matrix(dir: &Path, name: &str, op: &Operator) -> PathBuf {
    let path = dir.join(name);
    MatrixFile::from_operator(op).write(&path).unwrap();
    path
}

fn read(path: &Path) -> Operator {
    MatrixFile::read_operator(path).unwrap()
}

fn close(a: &Operator, b: &Operator) -> bool {
    approx_equal(a, b, &ToleranceConfig::default()).unwrap()
}

fn real(rows: usize, cols: usize, entries: &[f64]) -> Operator {
    Operator::from_real(rows, cols, entries).unwrap()
}

#[test]
fn polar_of_zero_and_identity() {
    let dir = TempDir::new().unwrap();
    let zero = write_matrix(dir.path(), "zero.json", &Operator::zeros(3, 3));
    let out = ncentered(&["polar", zero.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    assert_eq!(verdict(&records(&out))["pass"], true);
    assert_eq!(read(&dir.path().join("zero_u.json")), Operator::zeros(3, 3));
    assert_eq!(read(&dir.path().join("zero_p.json")), Operator::zeros(3, 3));

    let id = write_matrix(dir.path(), "id.json", &Operator::identity(4));
    let out = ncentered(&["polar", id.to_str().unwrap(), "--out", "result"], dir.path());
    assert!(out.status.success());
    assert!(close(&read(&dir.path().join("result_u.json")), &Operator::identity(4)));
    assert!(close(&read(&dir.path().join("result_p.json")), &Operator::identity(4)));
}

#[test]
fn polar_of_seeded_fixture() {
    let dir = TempDir::new().unwrap();
    let t = random::gaussian(&mut trial_rng(2024, 0), 5, 5);
    let path = write_matrix(dir.path(), "fixture.json", &t);
    let out = ncentered(&["polar", path.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    let recs = records(&out);
    assert!(check(&recs, "reconstruction")["value"].as_f64().unwrap() < 1e-10);
    let u = read(&dir.path().join("fixture_u.json"));
    let p = read(&dir.path().join("fixture_p.json"));
    assert!(close(&(&u * &p), &t));
    assert!(verdict(&recs)["rank_margin"].as_f64().unwrap() > 0.0);
}

#[test]
fn classify_examples() {
    let dir = TempDir::new().unwrap();
    let normal = write_matrix(dir.path(), "normal.json", &random::normal(&mut trial_rng(5, 0), 4));
    let out = ncentered(&["classify", normal.to_str().unwrap(), "--max-n", "6"], dir.path());
    assert!(out.status.success());
    assert_eq!(summary(&records(&out))["verified_order"], 6);

    let gen = ncentered(&["counterexample", "--n", "2", "--out", "shift.json"], dir.path());
    assert!(gen.status.success());
    let out = ncentered(&["classify", "shift.json"], dir.path());
    let recs = records(&out);
    assert!(out.status.success());
    assert_eq!(summary(&recs)["verified_order"], 2);
    assert_eq!(check(&recs, "oracle_agreement")["pass"], true);

    let jordan = write_matrix(dir.path(), "j2.json", &real(2, 2, &[0.0, 1.0, 0.0, 0.0]));
    let out = ncentered(&["classify", jordan.to_str().unwrap()], dir.path());
    assert_eq!(summary(&records(&out))["binormal"], true);

    let wide = write_matrix(dir.path(), "wide.json", &Operator::zeros(2, 3));
    let out = ncentered(&["classify", wide.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("square"));
}

#[test]
fn counterexample_examples() {
    let dir = TempDir::new().unwrap();
    let out = ncentered(&["counterexample", "--n", "2"], dir.path());
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(summary(&recs)["verified_order"], 2);
    let t = read(&dir.path().join("counterexample_n2_m5.json"));
    assert_eq!(t.shape(), (15, 15));

    let out = ncentered(&["counterexample", "--n", "4", "--blocks", "7", "--out", "four.json"], dir.path());
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(summary(&recs)["verified_order"], 4);
    assert_eq!(check(&recs, "criterion_order")["pass"], true);
    assert_eq!(check(&recs, "definitional_order")["pass"], true);
    assert_eq!(read(&dir.path().join("four.json")).shape(), (21, 21));

    for args in [&["counterexample", "--n", "1"][..], &["counterexample", "--n", "3", "--blocks", "4"]] {
        let out = ncentered(args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn mp_examples() {
    let dir = TempDir::new().unwrap();
    let d = write_matrix(dir.path(), "d.json", &Operator::diag_real(&[2.0, 0.0]));
    let out = ncentered(&["mp", d.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    assert!(close(&read(&dir.path().join("d_mp.json")), &Operator::diag_real(&[0.5, 0.0])));

    let a = real(3, 3, &[2.0, 1.0, 0.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0]);
    let path = write_matrix(dir.path(), "inv.json", &a);
    let out = ncentered(&["mp", path.to_str().unwrap(), "--out", "inverse.json"], dir.path());
    assert!(out.status.success());
    let inv = read(&dir.path().join("inverse.json"));
    assert!(close(&(&a * &inv), &Operator::identity(3)));
    for name in ["txt_eq_t", "xtx_eq_x", "tx_hermitian", "xt_hermitian"] {
        assert!(check(&records(&out), name)["value"].as_f64().unwrap() < 1e-10);
    }

    let u = random::gaussian(&mut trial_rng(6, 0), 3, 1);
    let v = random::gaussian(&mut trial_rng(6, 1), 1, 3);
    let rank_one = &u * &v;
    let path = write_matrix(dir.path(), "r1.json", &rank_one);
    let out = ncentered(&["mp", path.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    let recs = records(&out);
    assert_eq!(summary(&recs)["rank"], 1);
    assert_eq!(check(&recs, "dagger_polar_initial_projection")["pass"], true);
    // Penrose equations re-evaluated on the written file
    let x = read(&dir.path().join("r1_mp.json"));
    let strict = ToleranceConfig::default().with_residual_tol(1e-10);
    assert!(penrose_check(&rank_one, &x, &strict).unwrap().passes());
}

#[test]
fn malformed_input_is_rejected() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"rows": 2, "cols": 2, "data": [[1.0, 0.0]]}"#).unwrap();
    for cmd in ["polar", "mp", "classify"] {
        let out = ncentered(&[cmd, bad.to_str().unwrap()], dir.path());
        assert_eq!(out.status.code(), Some(2), "{cmd}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("expected 4 entries"));
    }
    let out = ncentered(&["polar", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.json"));
}

#[test]
fn verify_theorems_suites() {
    let dir = TempDir::new().unwrap();
    let args = ["verify-theorems", "--suite", "centered-criterion", "--trials", "200", "--dim", "5", "--seed", "3"];
    let out = ncentered(&args, dir.path());
    assert!(out.status.success());
    let recs = records(&out);
    let oracle = check(&recs, "centered-criterion/oracle_agreement");
    assert_eq!(oracle["failures"], 0);
    assert!(oracle["trials"].as_u64().unwrap() >= 200);

    let out = ncentered(&["verify-theorems", "--suite", "product-polar", "--trials", "50"], dir.path());
    assert!(out.status.success());
    assert_eq!(check(&records(&out), "product-polar/random_three_way_agreement")["failures"], 0);

    let out = ncentered(&["verify-theorems", "--suite", "moore-penrose", "--trials", "50"], dir.path());
    assert!(out.status.success());
    assert_eq!(check(&records(&out), "moore-penrose/order_symmetry")["failures"], 0);
}

#[test]
fn verify_theorems_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = ["verify-theorems", "--suite", "all", "--trials", "8", "--dim", "4", "--seed", "99"];
    let a = ncentered(&args, dir.path());
    let b = ncentered(&args, dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = ncentered(&["verify-theorems", "--suite", "all", "--trials", "8", "--dim", "4", "--seed", "100"], dir.path());
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn exit_status_follows_verdict() {
    let dir = TempDir::new().unwrap();
    // with zero tolerances rounding errors fail the residual checks
    let args = ["verify-theorems", "--suite", "polar", "--trials", "5", "--eq-tol", "0", "--zero-tol", "0"];
    let out = ncentered(&args, dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(verdict(&records(&out))["pass"], false);

    for bad in [&["verify-theorems", "--suite", "nope"][..], &["verify-theorems", "--dim", "13"], &["verify-theorems", "--trials", "0"]] {
        assert_eq!(ncentered(bad, dir.path()).status.code(), Some(2), "{bad:?}");
    }
    assert_eq!(ncentered(&["polar", "x.json", "--eq-tol", "2"], dir.path()).status.code(), Some(2));
}
