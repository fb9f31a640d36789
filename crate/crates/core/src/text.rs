//! The matrix text format and deterministic printing of results.
//!
//! Rows are separated by newlines or `;`, entries by whitespace or `,`, and
//! `#` starts a comment. Entries are integers, `p/q` rationals, decimals
//! (with optional exponent) or complex literals such as `1+2i`, `-i`, `2.5i`.
//! A matrix made only of integers and rationals is exact; any other literal
//! makes the whole matrix complex.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kernel::scalar::{rational_to_f64, Complex, Rational};
use crate::kernel::Mat;
use crate::matrix::Matrix;
use crate::poly::Poly;

#[derive(Debug, Clone)]
enum Literal {
    Exact(Rational),
    Inexact(Complex),
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let digits = |t: &str| {
        let t = t.strip_prefix(['+', '-']).unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num) || !den.bytes().all(|b| b.is_ascii_digit()) || den.is_empty() {
        return None;
    }
    let n: BigInt = num.trim_start_matches('+').parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

fn parse_real(s: &str) -> Option<Literal> {
    if let Some(q) = parse_rational(s) {
        return Some(Literal::Exact(q));
    }
    let ok = s
        .bytes()
        .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-'));
    if !ok || !s.bytes().any(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse::<f64>().ok().map(|x| Literal::Inexact(Complex::new(x, 0.0)))
}

fn real_value(lit: &Literal) -> f64 {
    match lit {
        Literal::Exact(q) => rational_to_f64(q),
        Literal::Inexact(z) => z.re,
    }
}

fn parse_literal(tok: &str) -> Option<Literal> {
    let Some(body) = tok.strip_suffix('i') else {
        return parse_real(tok);
    };
    // Split `a±b` at the last sign that is not the leading one and does not
    // belong to an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() { 0.0 } else { real_value(&parse_real(re)?) };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => real_value(&parse_real(s)?),
    };
    Some(Literal::Inexact(Complex::new(re, im)))
}

/// Parses the text format; `exact` rejects anything but integers and `p/q`.
pub fn parse_matrix_with(text: &str, exact: bool) -> Result<Matrix> {
    let mut rows: Vec<Vec<Literal>> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for segment in content.split(';') {
            let mut row = Vec::new();
            let mut col = 0;
            for piece in segment.split(|c: char| c.is_whitespace() || c == ',') {
                let start = offset + col;
                col += piece.len() + 1;
                if piece.is_empty() {
                    continue;
                }
                let column = raw[..start].chars().count() + 1;
                let lit = parse_literal(piece)
                    .ok_or_else(|| parse_err(line_no, column, format!("bad entry '{piece}'")))?;
                if let Literal::Inexact(z) = &lit {
                    if !z.re.is_finite() || !z.im.is_finite() {
                        return Err(parse_err(line_no, column, format!("non-finite entry '{piece}'")));
                    }
                    if exact {
                        return Err(parse_err(
                            line_no,
                            column,
                            format!("'{piece}' is not an exact rational"),
                        ));
                    }
                }
                row.push(lit);
            }
            offset += segment.len() + 1;
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let Some(first) = rows.first() else {
        return Err(parse_err(1, 1, "no entries"));
    };
    let width = first.len();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
        return Err(Error::RaggedRows {
            row: i + 1,
            expected: width,
            found: r.len(),
        });
    }
    let all_exact = rows.iter().flatten().all(|l| matches!(l, Literal::Exact(_)));
    if all_exact {
        let data = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|l| match l {
                        Literal::Exact(q) => q,
                        Literal::Inexact(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix::Rational(Mat::from_rows(data)?))
    } else {
        let data = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|l| match l {
                        Literal::Exact(q) => Complex::new(rational_to_f64(&q), 0.0),
                        Literal::Inexact(z) => z,
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix::Complex(Mat::from_rows(data)?))
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    parse_matrix_with(text, false)
}

/// A float with 17 significant digits, trailing zeros trimmed, in fixed
/// notation for moderate exponents and scientific otherwise.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn format_complex(z: Complex) -> String {
    let (re, im) = (z.re, z.im);
    if im == 0.0 {
        return format_f64(re);
    }
    let mag = format_f64(im.abs());
    if re == 0.0 {
        let sign = if im < 0.0 { "-" } else { "" };
        return format!("{sign}{mag}i");
    }
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{sign}{mag}i", format_f64(re))
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn format_matrix(m: &Matrix) -> String {
    fn rows<T>(m: &Mat<T>, f: impl Fn(&T) -> String) -> String
    where
        T: crate::kernel::Field,
    {
        (0..m.rows())
            .map(|i| m.row(i).iter().map(&f).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
    match m {
        Matrix::Rational(a) => rows(a, format_rational),
        Matrix::Complex(a) => rows(a, |z| format_complex(*z)),
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    let entries: Vec<Vec<String>> = match m {
        Matrix::Rational(a) => (0..a.rows())
            .map(|i| a.row(i).iter().map(format_rational).collect())
            .collect(),
        Matrix::Complex(a) => (0..a.rows())
            .map(|i| a.row(i).iter().map(|z| format_complex(*z)).collect())
            .collect(),
    };
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "kind": m.kind().to_string(),
        "entries": entries,
    })
}

pub fn spectrum_json(values: &[Complex]) -> Value {
    let list: Vec<Value> = values
        .iter()
        .map(|z| json!({ "re": z.re + 0.0, "im": z.im + 0.0 }))
        .collect();
    json!({ "eigenvalues": list })
}

pub fn poly_json(p: &Poly) -> Value {
    json!({ "coeffs": p.coeff_strings() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{c, q, qr};

    #[test]
    fn parses_rational_rows() {
        let m = parse_matrix("1 -1 0 0; 0 0 1 0").unwrap();
        assert_eq!(
            m,
            Matrix::Rational(Mat::from_i64_rows(&[&[1, -1, 0, 0], &[0, 0, 1, 0]]))
        );
        let r = parse_matrix("1/3").unwrap();
        assert_eq!(r, Matrix::Rational(Mat::new(1, 1, vec![qr(1, 3)]).unwrap()));
        let nl = parse_matrix("# comment\n1, 2\n\n3, 4;\n").unwrap();
        assert_eq!(nl, Matrix::Rational(Mat::from_i64_rows(&[&[1, 2], &[3, 4]])));
    }

    #[test]
    fn parses_complex_forms() {
        let m = parse_matrix("1+2i, 0; 0, 1").unwrap();
        let Matrix::Complex(a) = m else { panic!() };
        assert_eq!(a.get(0, 0), &c(1.0, 2.0));
        let Matrix::Complex(b) = parse_matrix("i -i 2i 1.5-2.5i 1e-3+1e2i 0.5").unwrap() else {
            panic!()
        };
        let want = [c(0.0, 1.0), c(0.0, -1.0), c(0.0, 2.0), c(1.5, -2.5), c(1e-3, 1e2), c(0.5, 0.0)];
        assert_eq!(b.data(), &want);
    }

    #[test]
    fn mixed_literals_promote() {
        let Matrix::Complex(a) = parse_matrix("1/2 0.25").unwrap() else { panic!() };
        assert_eq!(a.data(), &[c(0.5, 0.0), c(0.25, 0.0)]);
        assert!(matches!(parse_matrix_with("1/2 0.25", true), Err(Error::Parse { .. })));
    }

    #[test]
    fn reports_errors_with_positions() {
        assert_eq!(
            parse_matrix("1 2\n3 x"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                message: "bad entry 'x'".into()
            })
        );
        assert_eq!(
            parse_matrix("1 2; 3"),
            Err(Error::RaggedRows {
                row: 2,
                expected: 2,
                found: 1
            })
        );
        assert!(parse_matrix("1/0").is_err());
        assert!(parse_matrix("   ").is_err());
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_f64(0.1), "0.10000000000000001");
        assert_eq!(format_f64(1.0), "1");
        assert_eq!(format_f64(-2.5), "-2.5");
        assert_eq!(format_f64(1e-7), "9.9999999999999995e-8");
        assert_eq!(format_f64(-0.0), "0");
        assert_eq!(format_complex(c(0.0, 1.0)), "1i");
        assert_eq!(format_complex(c(-1.0, -1.0)), "-1-1i");
        assert_eq!(format_complex(c(2.0, 0.0)), "2");
    }

    #[test]
    fn printing_round_trips() {
        let m = parse_matrix("1/3 -2; 7 0").unwrap();
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        let z = parse_matrix("0.1+0.2i -3.25e-9i; 1e20 -7").unwrap();
        let back = parse_matrix(&format_matrix(&z)).unwrap();
        let (Matrix::Complex(a), Matrix::Complex(b)) = (&z, &back) else { panic!() };
        assert!(a.near(b, 1e-12));
        assert_eq!(format_rational(&q(-4)), "-4");
    }
}
