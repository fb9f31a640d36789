//! The two scalar fields: exact rationals and 64-bit complex floats.
//!
//! Structural algebra (roots, lattice operations, characteristic and
//! annihilator polynomials) runs over [`Rational`]; spectra and
//! transcendental functions run over [`Complex`]. Conversion from rational
//! to complex is always explicit.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_complex::Complex64 as Complex;
pub use num_rational::BigRational as Rational;

/// Absolute tolerance used for float comparisons unless a call overrides it.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    Complex,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Complex => "complex",
        })
    }
}

/// A field of characteristic zero that the dense kernels are generic over.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact zero test.
    fn is_zero(&self) -> bool;
    /// Equality up to `tol` for floats; exact for rationals (the tolerance is ignored).
    fn near(&self, other: &Self, tol: f64) -> bool;
    fn near_zero(&self, tol: f64) -> bool;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex;
    /// Modulus as a float; used for pivot selection.
    fn magnitude(&self) -> f64;
    fn into_scalar(self) -> Scalar;
}

impl Field for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn near(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn near_zero(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_complex(&self) -> Complex {
        Complex::new(rational_to_f64(self), 0.0)
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
    fn into_scalar(self) -> Scalar {
        Scalar::Rational(self)
    }
}

impl Field for Complex {
    const KIND: ScalarKind = ScalarKind::Complex;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(num as f64 / den as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn near(&self, other: &Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }
    fn near_zero(&self, tol: f64) -> bool {
        self.re.abs() <= tol && self.im.abs() <= tol
    }
    fn conj(&self) -> Self {
        num_complex::Complex::conj(self)
    }
    fn to_complex(&self) -> Complex {
        *self
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn into_scalar(self) -> Scalar {
        Scalar::Complex(self)
    }
}

/// Converts a rational to the nearest float, also for numerators and
/// denominators beyond the `f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = q.numer().to_f64().unwrap_or(f64::NAN);
    let d = q.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// A single value of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Complex(Complex),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Complex(_) => ScalarKind::Complex,
        }
    }

    pub fn to_complex(&self) -> Complex {
        match self {
            Scalar::Rational(q) => q.to_complex(),
            Scalar::Complex(c) => *c,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Complex(_) => None,
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

impl From<Complex> for Scalar {
    fn from(c: Complex) -> Self {
        Scalar::Complex(c)
    }
}

/// Shorthand for an integer-valued rational.
pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Shorthand for `num/den` as a rational.
pub fn qr(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}
