use std::io::Write;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use stpalg::kernel::scalar::{c, qr, Complex};
use stpalg::kernel::Mat;
use stpalg::matrix::Matrix;
use stpalg::text::{format_matrix, parse_matrix, parse_matrix_with};
use stpalg::Error;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stpalg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn grammar_examples() {
    let m = parse_matrix("1 -1 0 0; 0 0 1 0").unwrap();
    assert_eq!(m.shape(), (2, 4));
    assert!(matches!(parse_matrix("1/3").unwrap(), Matrix::Rational(ref x) if *x.get(0, 0) == qr(1, 3)));
    match parse_matrix("1+2i, 0; 0, 1").unwrap() {
        Matrix::Complex(x) => assert_eq!(*x.get(0, 0), c(1.0, 2.0)),
        other => panic!("expected complex, got {other:?}"),
    }
    assert!(matches!(parse_matrix("1/2 0.5").unwrap(), Matrix::Complex(_)));
    assert!(matches!(parse_matrix_with("0.5", true), Err(Error::Parse { .. })));
}

#[test]
fn root_of_identity_is_one() {
    let (code, out, _) = run(&["root", "-"], "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    assert_eq!((code, out.as_str()), (0, "1\n"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["sta", "-", "-"], "");
    assert_eq!(code, 2, "{err}");
    let (code, _, err) = run(&["root", "-"], "1 2\n3\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[RAGGED_ROWS]"), "{err}");
    let (code, _, err) = run(&["trmod", "-"], "1 2 3\n");
    assert_eq!(code, 1);
    assert!(err.starts_with("error[NOT_SQUARE]"), "{err}");
    let (code, _, err) = run(&["--exact", "charpoly", "-"], "0.5 1; 2 3\n");
    assert_eq!(code, 2);
    assert!(err.starts_with("error[PARSE_ERROR]"), "{err}");
    let (code, _, err) = run(&["charpoly", "-"], "1i 0; 0 1\n");
    assert_eq!(code, 1);
    assert!(err.starts_with("error[NON_RATIONAL]"), "{err}");
}

#[test]
fn json_schemas() {
    let (_, out, _) = run(&["--json", "root", "-"], "1/2 0; 0 1/2\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"], 1);
    assert_eq!(v["kind"], "rational");
    assert_eq!(v["entries"][0][0], "1/2");
    let (_, out, _) = run(&["--json", "charpoly", "-"], "1 2; 3 4\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["-2", "-5", "1"]));
}

#[test]
fn output_is_deterministic() {
    let input = "0 1 0; 0 0 1; 1 0 0\n";
    let first = run(&["eig", "-", "--t", "3"], input);
    for _ in 0..3 {
        assert_eq!(run(&["eig", "-", "--t", "3"], input), first);
    }
}

#[test]
fn right_side_flag() {
    let (_, out, _) = run(&["--side", "right", "root", "-"], "1 2 0 0\n3 4 0 0\n0 0 1 2\n0 0 3 4\n");
    assert_eq!(out, "1 2\n3 4\n");
    let (_, out, _) = run(&["root", "-"], "1 2 0 0\n3 4 0 0\n0 0 1 2\n0 0 3 4\n");
    assert_eq!(out.lines().count(), 4);
}

fn rational_mat() -> impl Strategy<Value = Matrix> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, k)| {
        proptest::collection::vec((-50i64..50, 1i64..20), r * k)
            .prop_map(move |v| Matrix::Rational(Mat::new(r, k, v.into_iter().map(|(n, d)| qr(n, d)).collect()).unwrap()))
    })
}

fn complex_mat() -> impl Strategy<Value = Mat<Complex>> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, k)| {
        proptest::collection::vec((-1e6f64..1e6, -1e3f64..1e3), r * k)
            .prop_map(move |v| Mat::new(r, k, v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn rational_round_trip(m in rational_mat()) {
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn complex_round_trip(m in complex_mat()) {
        let back = parse_matrix(&format_matrix(&Matrix::Complex(m.clone()))).unwrap().to_complex();
        prop_assert!(back.near(&m, 1e-12 * (1.0 + m.max_abs())));
    }
}
