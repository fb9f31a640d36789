//! Transcendental matrix functions on 64-bit complex floats.
//!
//! `exp` is scaling-and-squaring with a degree-13 Padé approximant, `log` is
//! inverse scaling-and-squaring (Denman–Beavers square roots, then a Gregory
//! series), and `sin`/`cos` are Taylor series on a halved argument followed
//! by double-angle recovery.

use std::fmt;
use std::str::FromStr;

use super::dense::Mat;
use super::eigen::eigenvalues;
use super::linalg::inverse;
use super::scalar::{Complex, Field, DEFAULT_TOL};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatFn {
    Exp,
    Log,
    Sin,
    Cos,
}

impl FromStr for MatFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exp" => Ok(MatFn::Exp),
            "log" => Ok(MatFn::Log),
            "sin" => Ok(MatFn::Sin),
            "cos" => Ok(MatFn::Cos),
            other => Err(Error::InvalidArgument(format!("unknown matrix function {other:?}"))),
        }
    }
}

impl fmt::Display for MatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatFn::Exp => "exp",
            MatFn::Log => "log",
            MatFn::Sin => "sin",
            MatFn::Cos => "cos",
        })
    }
}

pub fn apply<T: Field>(f: MatFn, a: &Mat<T>) -> Result<Mat<Complex>> {
    match f {
        MatFn::Exp => mat_exp(a),
        MatFn::Log => mat_log(a),
        MatFn::Sin => mat_sin(a),
        MatFn::Cos => mat_cos(a),
    }
}

fn square_complex<T: Field>(a: &Mat<T>) -> Result<Mat<Complex>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let z = a.to_complex();
    if !z.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(z)
}

fn mm(a: &Mat<Complex>, b: &Mat<Complex>) -> Mat<Complex> {
    a.matmul(b).expect("square operands of equal size")
}

fn lin(terms: &[(f64, &Mat<Complex>)]) -> Mat<Complex> {
    let (r, c) = terms[0].1.shape();
    let mut out = Mat::<Complex>::zeros(r, c);
    for (coef, m) in terms {
        out = out
            .add(&m.scale(&Complex::new(*coef, 0.0)))
            .expect("equal shapes");
    }
    out
}

const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

pub fn mat_exp<T: Field>(a: &Mat<T>) -> Result<Mat<Complex>> {
    let a = square_complex(a)?;
    let n = a.rows();
    let norm = a.norm_one();
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let a = a.scale(&Complex::new(0.5f64.powi(s), 0.0));
    let b = &PADE13;
    let id = Mat::<Complex>::identity(n);
    let a2 = mm(&a, &a);
    let a4 = mm(&a2, &a2);
    let a6 = mm(&a4, &a2);
    let inner_u = mm(&a6, &lin(&[(b[13], &a6), (b[11], &a4), (b[9], &a2)]));
    let u = mm(
        &a,
        &inner_u
            .add(&lin(&[(b[7], &a6), (b[5], &a4), (b[3], &a2), (b[1], &id)]))
            .expect("equal shapes"),
    );
    let inner_v = mm(&a6, &lin(&[(b[12], &a6), (b[10], &a4), (b[8], &a2)]));
    let v = inner_v
        .add(&lin(&[(b[6], &a6), (b[4], &a4), (b[2], &a2), (b[0], &id)]))
        .expect("equal shapes");
    let p = v.add(&u).expect("equal shapes");
    let q = v.sub(&u).expect("equal shapes");
    let mut r = mm(&inverse(&q)?, &p);
    for _ in 0..s {
        r = mm(&r, &r);
    }
    if !r.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(r)
}

fn sqrtm_db(a: &Mat<Complex>) -> Result<Mat<Complex>> {
    let n = a.rows();
    let mut y = a.clone();
    let mut z = Mat::<Complex>::identity(n);
    let half = Complex::new(0.5, 0.0);
    for _ in 0..100 {
        let yi = inverse(&y)?;
        let zi = inverse(&z)?;
        let y1 = y.add(&zi).expect("equal shapes").scale(&half);
        let z1 = z.add(&yi).expect("equal shapes").scale(&half);
        let delta = y1.sub(&y).expect("equal shapes").norm_one();
        y = y1;
        z = z1;
        if delta <= 1e-15 * y.norm_one().max(1.0) {
            return Ok(y);
        }
    }
    Err(Error::NoConvergence)
}

/// Principal logarithm. Fails with [`Error::LogDomain`] if an eigenvalue lies
/// on the closed negative real axis (zero included).
pub fn mat_log<T: Field>(a: &Mat<T>) -> Result<Mat<Complex>> {
    let a = square_complex(a)?;
    let n = a.rows();
    for lambda in eigenvalues(&a)? {
        let scale = lambda.norm().max(1.0);
        if lambda.im.abs() <= DEFAULT_TOL * scale && lambda.re <= DEFAULT_TOL * scale {
            return Err(Error::LogDomain {
                re: format!("{}", lambda.re),
                im: format!("{}", lambda.im),
            });
        }
    }
    let id = Mat::<Complex>::identity(n);
    let mut x = a;
    let mut k = 0;
    while x.sub(&id).expect("equal shapes").norm_one() > 0.25 {
        x = sqrtm_db(&x)?;
        k += 1;
        if k > 64 {
            return Err(Error::NoConvergence);
        }
    }
    // log(I + E) = 2·artanh(Z), Z = E(2I + E)⁻¹
    let e = x.sub(&id).expect("equal shapes");
    let zmat = mm(&e, &inverse(&e.add(&id.scale(&Complex::new(2.0, 0.0))).expect("equal"))?);
    let z2 = mm(&zmat, &zmat);
    let mut power = zmat.clone();
    let mut sum = zmat;
    for j in 1..200 {
        power = mm(&power, &z2);
        let term = power.scale(&Complex::new(1.0 / (2 * j + 1) as f64, 0.0));
        let small = term.norm_one() <= 1e-18 * sum.norm_one().max(1e-300);
        sum = sum.add(&term).expect("equal shapes");
        if small {
            break;
        }
    }
    Ok(sum.scale(&Complex::new(2.0 * 2f64.powi(k), 0.0)))
}

/// Taylor sums for `cos` and `sin` of an argument with 1-norm at most one.
fn sin_cos_series(x: &Mat<Complex>) -> (Mat<Complex>, Mat<Complex>) {
    let n = x.rows();
    let mut cos = Mat::<Complex>::identity(n);
    let mut sin = x.clone();
    let mut term = x.clone();
    for k in 1..30 {
        // term holds x^(2k-1)/(2k-1)!
        let even = mm(&term, x).scale(&Complex::new(-1.0 / (2 * k) as f64, 0.0));
        // even holds (-1)^k x^(2k)/(2k)! up to the sign carried along
        let odd = mm(&even, x).scale(&Complex::new(1.0 / (2 * k + 1) as f64, 0.0));
        cos = cos.add(&even).expect("equal shapes");
        sin = sin.add(&odd).expect("equal shapes");
        let small = odd.norm_one() + even.norm_one() < 1e-20;
        term = odd;
        if small {
            break;
        }
    }
    (sin, cos)
}

fn sin_cos(a: &Mat<Complex>) -> (Mat<Complex>, Mat<Complex>) {
    let n = a.rows();
    let norm = a.norm_one();
    let s = if norm > 1.0 { norm.log2().ceil() as i32 } else { 0 };
    let x = a.scale(&Complex::new(0.5f64.powi(s), 0.0));
    let (mut sin, mut cos) = sin_cos_series(&x);
    let id = Mat::<Complex>::identity(n);
    let two = Complex::new(2.0, 0.0);
    for _ in 0..s {
        let s2 = mm(&sin, &cos).scale(&two);
        let c2 = mm(&cos, &cos).scale(&two).sub(&id).expect("equal shapes");
        sin = s2;
        cos = c2;
    }
    (sin, cos)
}

pub fn mat_sin<T: Field>(a: &Mat<T>) -> Result<Mat<Complex>> {
    Ok(sin_cos(&square_complex(a)?).0)
}

pub fn mat_cos<T: Field>(a: &Mat<T>) -> Result<Mat<Complex>> {
    Ok(sin_cos(&square_complex(a)?).1)
}
