//! A matrix whose scalar kind is decided at run time, for the text front
//! end and the C ABI.

use crate::error::{Error, Result};
use crate::kernel::scalar::{Complex, Rational, ScalarKind};
use crate::kernel::Mat;

#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Rational(Mat<Rational>),
    Complex(Mat<Complex>),
}

/// Two operands of one scalar kind.
pub enum Pair<'a> {
    Rational(&'a Mat<Rational>, &'a Mat<Rational>),
    Complex(&'a Mat<Complex>, &'a Mat<Complex>),
}

/// Applies a kind-generic expression to whichever matrix is inside and
/// rewraps a matrix result in the same kind.
#[macro_export]
macro_rules! map_matrix {
    ($m:expr, $x:ident => $body:expr) => {
        match $m {
            $crate::matrix::Matrix::Rational($x) => $crate::matrix::Matrix::Rational($body),
            $crate::matrix::Matrix::Complex($x) => $crate::matrix::Matrix::Complex($body),
        }
    };
}

/// Like [`map_matrix!`] for fallible expressions.
#[macro_export]
macro_rules! try_map_matrix {
    ($m:expr, $x:ident => $body:expr) => {
        match $m {
            $crate::matrix::Matrix::Rational($x) => $body.map($crate::matrix::Matrix::Rational),
            $crate::matrix::Matrix::Complex($x) => $body.map($crate::matrix::Matrix::Complex),
        }
    };
}

/// Binary form of [`try_map_matrix!`]; fails on a kind mismatch.
#[macro_export]
macro_rules! try_zip_matrix {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match $crate::matrix::Matrix::pair($a, $b) {
            Err(e) => Err(e),
            Ok($crate::matrix::Pair::Rational($x, $y)) => $body.map($crate::matrix::Matrix::Rational),
            Ok($crate::matrix::Pair::Complex($x, $y)) => $body.map($crate::matrix::Matrix::Complex),
        }
    };
}

impl Matrix {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Matrix::Rational(_) => ScalarKind::Rational,
            Matrix::Complex(_) => ScalarKind::Complex,
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            Matrix::Rational(m) => m.rows(),
            Matrix::Complex(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            Matrix::Rational(m) => m.cols(),
            Matrix::Complex(m) => m.cols(),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    pub fn to_complex(&self) -> Mat<Complex> {
        match self {
            Matrix::Rational(m) => m.to_complex(),
            Matrix::Complex(m) => m.clone(),
        }
    }

    /// Explicit promotion to the complex kind.
    pub fn promoted(&self) -> Matrix {
        Matrix::Complex(self.to_complex())
    }

    pub fn as_rational(&self) -> Result<&Mat<Rational>> {
        match self {
            Matrix::Rational(m) => Ok(m),
            Matrix::Complex(_) => Err(Error::NonRational),
        }
    }

    pub fn pair<'a>(a: &'a Matrix, b: &'a Matrix) -> Result<Pair<'a>> {
        match (a, b) {
            (Matrix::Rational(x), Matrix::Rational(y)) => Ok(Pair::Rational(x, y)),
            (Matrix::Complex(x), Matrix::Complex(y)) => Ok(Pair::Complex(x, y)),
            _ => Err(Error::KindMismatch),
        }
    }

    /// Brings two operands to a common kind, promoting to complex when
    /// they differ.
    pub fn unify(a: Matrix, b: Matrix) -> (Matrix, Matrix) {
        if a.kind() == b.kind() {
            (a, b)
        } else {
            (a.promoted(), b.promoted())
        }
    }
}

impl From<Mat<Rational>> for Matrix {
    fn from(m: Mat<Rational>) -> Self {
        Matrix::Rational(m)
    }
}

impl From<Mat<Complex>> for Matrix {
    fn from(m: Mat<Complex>) -> Self {
        Matrix::Complex(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::stp::stp_left;

    #[test]
    fn dispatch_and_mismatch() {
        let a = Matrix::from(Mat::<Rational>::from_i64_rows(&[&[1, 2]]));
        let b = Matrix::from(Mat::<Rational>::from_i64_rows(&[&[1], &[2], &[3], &[4]]));
        let r: Result<Matrix> = try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(stp_left(x, y)));
        assert_eq!(r.unwrap().shape(), (2, 1));
        let c = b.promoted();
        let bad: Result<Matrix> = try_zip_matrix!(&a, &c, |x, y| Ok::<_, Error>(stp_left(x, y)));
        assert_eq!(bad, Err(Error::KindMismatch));
        let (x, y) = Matrix::unify(a, c);
        assert_eq!((x.kind(), y.kind()), (ScalarKind::Complex, ScalarKind::Complex));
    }
}
