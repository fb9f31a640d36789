//! C ABI for `stpalg`.
//!
//! Matrices cross the boundary as opaque `StpMatrix` handles created by the
//! `stp_matrix_*` constructors and released with `stp_matrix_free`. Every
//! fallible call returns an `StpStatus`; on failure the message is available
//! from `stp_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stpalg::equivalence::{equivalent_tol, root_of_tol, Side};
use stpalg::invariant::{min_annihilator, realization, spectrum};
use stpalg::kernel::scalar::{Complex, Rational};
use stpalg::kernel::stp::{sta_left, sta_right, stp_left, stp_right, swap_matrix};
use stpalg::kernel::Mat;
use stpalg::matrix::{Matrix, Pair};
use stpalg::text::{format_matrix, parse_matrix};
use stpalg::vectors::{vprod, vprod_right};
use stpalg::{try_map_matrix, try_zip_matrix, Error};

/// Opaque matrix handle.
pub struct StpMatrix(Matrix);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StpStatus {
    Ok = 0,
    NullPointer = 1,
    Panic = 2,
    KindMismatch = 3,
    EmptyMatrix = 4,
    EntryCount = 5,
    DimensionMismatch = 6,
    MuMismatch = 7,
    NotSquare = 8,
    NotSquareClass = 9,
    NotEquivalent = 10,
    IndivisibleShape = 11,
    LogDomain = 12,
    NonRational = 13,
    NotColumn = 14,
    NotSuperior = 15,
    LeafNotDivisible = 16,
    NotInvariantDim = 17,
    Unbounded = 18,
    NotPermutationMatrix = 19,
    InvalidPermutation = 20,
    Singular = 21,
    NonFinite = 22,
    Overflow = 23,
    NoConvergence = 24,
    Parse = 25,
    RaggedRows = 26,
    InvalidArgument = 27,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StpSide {
    Left = 0,
    Right = 1,
}

impl From<StpSide> for Side {
    fn from(s: StpSide) -> Side {
        match s {
            StpSide::Left => Side::Left,
            StpSide::Right => Side::Right,
        }
    }
}

fn status_of(e: &Error) -> StpStatus {
    match e {
        Error::KindMismatch => StpStatus::KindMismatch,
        Error::EmptyMatrix => StpStatus::EmptyMatrix,
        Error::EntryCount { .. } => StpStatus::EntryCount,
        Error::DimensionMismatch { .. } => StpStatus::DimensionMismatch,
        Error::MuMismatch { .. } => StpStatus::MuMismatch,
        Error::NotSquare { .. } => StpStatus::NotSquare,
        Error::NotSquareClass => StpStatus::NotSquareClass,
        Error::NotEquivalent => StpStatus::NotEquivalent,
        Error::IndivisibleShape { .. } => StpStatus::IndivisibleShape,
        Error::LogDomain { .. } => StpStatus::LogDomain,
        Error::NonRational => StpStatus::NonRational,
        Error::NotColumn { .. } => StpStatus::NotColumn,
        Error::NotSuperior { .. } => StpStatus::NotSuperior,
        Error::LeafNotDivisible { .. } => StpStatus::LeafNotDivisible,
        Error::NotInvariantDim { .. } => StpStatus::NotInvariantDim,
        Error::Unbounded { .. } => StpStatus::Unbounded,
        Error::NotPermutationMatrix => StpStatus::NotPermutationMatrix,
        Error::InvalidPermutation(_) => StpStatus::InvalidPermutation,
        Error::Singular => StpStatus::Singular,
        Error::NonFinite => StpStatus::NonFinite,
        Error::Overflow => StpStatus::Overflow,
        Error::NoConvergence => StpStatus::NoConvergence,
        Error::Parse { .. } => StpStatus::Parse,
        Error::RaggedRows { .. } => StpStatus::RaggedRows,
        Error::InvalidArgument(_) => StpStatus::InvalidArgument,
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Fail {
    Null,
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, converting errors and panics into a status and the thread's
/// last error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> StpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StpStatus::Ok,
        Ok(Err(Fail::Null)) => {
            set_error("null pointer argument".into());
            StpStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(format!("{}: {e}", e.code()));
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            StpStatus::Panic
        }
    }
}

unsafe fn mat<'a>(p: *const StpMatrix) -> Result<&'a Matrix, Fail> {
    p.as_ref().map(|m| &m.0).ok_or(Fail::Null)
}

unsafe fn emit(out: *mut *mut StpMatrix, m: Matrix) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null);
    }
    *out = Box::into_raw(Box::new(StpMatrix(m)));
    Ok(())
}

unsafe fn pair(a: *const StpMatrix, b: *const StpMatrix) -> Result<(Matrix, Matrix), Fail> {
    Ok(Matrix::unify(mat(a)?.clone(), mat(b)?.clone()))
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next `stp_*` call on the same thread.
#[no_mangle]
pub extern "C" fn stp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses the text matrix format from a NUL-terminated UTF-8 string.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_parse(text: *const c_char, out: *mut *mut StpMatrix) -> StpStatus {
    guard(|| {
        if text.is_null() {
            return Err(Fail::Null);
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Error::InvalidArgument(format!("text is not UTF-8: {e}")))?;
        emit(out, parse_matrix(s)?)
    })
}

/// Builds an exact matrix from row-major numerators and denominators.
///
/// # Safety
/// `num` and `den` must each point to `rows * cols` values.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_new_rational(
    rows: usize,
    cols: usize,
    num: *const i64,
    den: *const i64,
    out: *mut *mut StpMatrix,
) -> StpStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(Fail::Null);
        }
        let n = rows.checked_mul(cols).ok_or(Error::Overflow)?;
        let num = std::slice::from_raw_parts(num, n);
        let den = std::slice::from_raw_parts(den, n);
        let mut data = Vec::with_capacity(n);
        for (&p, &q) in num.iter().zip(den) {
            if q == 0 {
                return Err(Error::InvalidArgument("zero denominator".into()).into());
            }
            data.push(Rational::new(p.into(), q.into()));
        }
        emit(out, Matrix::Rational(Mat::new(rows, cols, data)?))
    })
}

/// Builds a complex matrix from row-major real and imaginary parts.
///
/// # Safety
/// `re` and `im` must each point to `rows * cols` values.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_new_complex(
    rows: usize,
    cols: usize,
    re: *const f64,
    im: *const f64,
    out: *mut *mut StpMatrix,
) -> StpStatus {
    guard(|| {
        if re.is_null() || im.is_null() {
            return Err(Fail::Null);
        }
        let n = rows.checked_mul(cols).ok_or(Error::Overflow)?;
        let re = std::slice::from_raw_parts(re, n);
        let im = std::slice::from_raw_parts(im, n);
        let data: Vec<Complex> = re.iter().zip(im).map(|(&a, &b)| Complex::new(a, b)).collect();
        if data.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite.into());
        }
        emit(out, Matrix::Complex(Mat::new(rows, cols, data)?))
    })
}

/// # Safety
/// `m` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_free(m: *mut StpMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle or NULL (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_rows(m: *const StpMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// # Safety
/// `m` must be a live handle or NULL (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_cols(m: *const StpMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// 1 for an exact rational matrix, 0 for complex or NULL.
///
/// # Safety
/// `m` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_is_rational(m: *const StpMatrix) -> i32 {
    m.as_ref().map_or(0, |m| i32::from(matches!(m.0, Matrix::Rational(_))))
}

/// Entry `(i, j)` as a complex double.
///
/// # Safety
/// `m` must be a live handle; `re` and `im` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_get(
    m: *const StpMatrix,
    i: usize,
    j: usize,
    re: *mut f64,
    im: *mut f64,
) -> StpStatus {
    guard(|| {
        let m = mat(m)?;
        if re.is_null() || im.is_null() {
            return Err(Fail::Null);
        }
        if i >= m.rows() || j >= m.cols() {
            return Err(Error::InvalidArgument(format!(
                "index ({i}, {j}) outside a {}x{} matrix",
                m.rows(),
                m.cols()
            ))
            .into());
        }
        let z = match m {
            Matrix::Rational(x) => stpalg::kernel::scalar::rational_to_f64(x.get(i, j)).into(),
            Matrix::Complex(x) => *x.get(i, j),
        };
        *re = z.re;
        *im = z.im;
        Ok(())
    })
}

/// The matrix in the text format; release with `stp_string_free`. NULL on
/// a NULL handle.
///
/// # Safety
/// `m` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn stp_matrix_to_string(m: *const StpMatrix) -> *mut c_char {
    match m.as_ref() {
        Some(m) => CString::new(format_matrix(&m.0)).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from `stp_matrix_to_string` or be NULL.
#[no_mangle]
pub unsafe extern "C" fn stp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Left (or right) semi-tensor product.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_stp(
    a: *const StpMatrix,
    b: *const StpMatrix,
    side: StpSide,
    out: *mut *mut StpMatrix,
) -> StpStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        let r = match side {
            StpSide::Left => try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(stp_left(x, y)))?,
            StpSide::Right => try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(stp_right(x, y)))?,
        };
        emit(out, r)
    })
}

/// Semi-tensor addition.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_sta(
    a: *const StpMatrix,
    b: *const StpMatrix,
    side: StpSide,
    out: *mut *mut StpMatrix,
) -> StpStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        let r = match side {
            StpSide::Left => try_zip_matrix!(&a, &b, |x, y| sta_left(x, y))?,
            StpSide::Right => try_zip_matrix!(&a, &b, |x, y| sta_right(x, y))?,
        };
        emit(out, r)
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_kron(a: *const StpMatrix, b: *const StpMatrix, out: *mut *mut StpMatrix) -> StpStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        emit(out, try_zip_matrix!(&a, &b, |x, y| Ok::<_, Error>(x.kron(y)))?)
    })
}

/// Swap matrix `W[m, n]`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_swap(m: usize, n: usize, out: *mut *mut StpMatrix) -> StpStatus {
    guard(|| {
        if m == 0 || n == 0 {
            return Err(Error::EmptyMatrix.into());
        }
        emit(out, Matrix::Rational(swap_matrix(m, n)))
    })
}

/// Vector product of a matrix with a column.
///
/// # Safety
/// `a`, `x` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_vprod(
    a: *const StpMatrix,
    x: *const StpMatrix,
    side: StpSide,
    out: *mut *mut StpMatrix,
) -> StpStatus {
    guard(|| {
        let (a, x) = pair(a, x)?;
        let r = match side {
            StpSide::Left => try_zip_matrix!(&a, &x, |p, q| vprod(p, q))?,
            StpSide::Right => try_zip_matrix!(&a, &x, |p, q| vprod_right(p, q))?,
        };
        emit(out, r)
    })
}

/// Irreducible root of the class of `a`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_root(a: *const StpMatrix, side: StpSide, tol: f64, out: *mut *mut StpMatrix) -> StpStatus {
    guard(|| {
        let a = mat(a)?;
        let r = try_map_matrix!(a, x => Ok::<_, Error>(root_of_tol(x, side.into(), tol).into_root()))?;
        emit(out, r)
    })
}

/// Writes 1 to `result` when the matrices are equivalent, 0 otherwise.
///
/// # Safety
/// `a`, `b` must be live handles and `result` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_equivalent(
    a: *const StpMatrix,
    b: *const StpMatrix,
    side: StpSide,
    tol: f64,
    result: *mut i32,
) -> StpStatus {
    guard(|| {
        let (a, b) = pair(a, b)?;
        if result.is_null() {
            return Err(Fail::Null);
        }
        let eq = match Matrix::pair(&a, &b)? {
            Pair::Rational(x, y) => equivalent_tol(x, y, side.into(), tol),
            Pair::Complex(x, y) => equivalent_tol(x, y, side.into(), tol),
        };
        *result = i32::from(eq);
        Ok(())
    })
}

/// Square realization of `a` on the invariant subspace of dimension `t`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_realization(a: *const StpMatrix, t: usize, out: *mut *mut StpMatrix) -> StpStatus {
    guard(|| {
        let a = mat(a)?;
        emit(out, try_map_matrix!(a, x => realization(x, t))?)
    })
}

/// Eigenvalues on the invariant subspace of dimension `t`, as a complex
/// column sorted by real then imaginary part.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_spectrum(a: *const StpMatrix, t: usize, out: *mut *mut StpMatrix) -> StpStatus {
    guard(|| {
        let sp = match mat(a)? {
            Matrix::Rational(x) => spectrum(x, t)?,
            Matrix::Complex(x) => spectrum(x, t)?,
        };
        emit(out, Matrix::Complex(Mat::column_vector(sp.eigenvalues)?))
    })
}

/// Minimal annihilator of `x` under `a`, as a 1-row rational matrix of
/// coefficients in ascending degree.
///
/// # Safety
/// `a`, `x` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn stp_annihilator(
    a: *const StpMatrix,
    x: *const StpMatrix,
    max_steps: usize,
    out: *mut *mut StpMatrix,
) -> StpStatus {
    guard(|| {
        let a = mat(a)?.as_rational()?;
        let x = mat(x)?.as_rational()?;
        let r = min_annihilator(a, x, max_steps)?;
        let coeffs = r.poly.coeffs().to_vec();
        emit(out, Matrix::Rational(Mat::new(1, coeffs.len(), coeffs)?))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> *mut StpMatrix {
        let c = CString::new(s).unwrap();
        let mut m = ptr::null_mut();
        assert_eq!(unsafe { stp_matrix_parse(c.as_ptr(), &mut m) }, StpStatus::Ok);
        m
    }

    fn text(m: *const StpMatrix) -> String {
        unsafe {
            let s = stp_matrix_to_string(m);
            let out = CStr::from_ptr(s).to_str().unwrap().to_string();
            stp_string_free(s);
            out
        }
    }

    #[test]
    fn product_round_trip() {
        let a = parse("1 2");
        let b = parse("1; 2; 3; 4");
        let mut c = ptr::null_mut();
        unsafe {
            assert_eq!(stp_stp(a, b, StpSide::Left, &mut c), StpStatus::Ok);
            assert_eq!((stp_matrix_rows(c), stp_matrix_cols(c)), (2, 1));
            assert_eq!(text(c), "7\n10");
            let (mut re, mut im) = (0.0, 0.0);
            assert_eq!(stp_matrix_get(c, 1, 0, &mut re, &mut im), StpStatus::Ok);
            assert_eq!((re, im), (10.0, 0.0));
            stp_matrix_free(a);
            stp_matrix_free(b);
            stp_matrix_free(c);
        }
    }

    #[test]
    fn errors_set_status_and_message() {
        let a = parse("1 2; 3 4");
        let b = parse("1 2 3");
        let mut c = ptr::null_mut();
        unsafe {
            assert_eq!(stp_sta(a, b, StpSide::Left, &mut c), StpStatus::MuMismatch);
            assert!(c.is_null());
            let msg = CStr::from_ptr(stp_last_error_message()).to_str().unwrap();
            assert!(msg.starts_with("MU_MISMATCH"));
            assert_eq!(stp_root(ptr::null(), StpSide::Left, 0.0, &mut c), StpStatus::NullPointer);
            let bad = CString::new("1 x").unwrap();
            assert_eq!(stp_matrix_parse(bad.as_ptr(), &mut c), StpStatus::Parse);
            stp_matrix_free(a);
            stp_matrix_free(b);
        }
    }

    #[test]
    fn constructors_and_annihilator() {
        let (num, den) = ([1i64, 0, 1, 1, 0, 1, 0, 1], [1i64; 8]);
        let mut a = ptr::null_mut();
        let mut x = ptr::null_mut();
        let mut p = ptr::null_mut();
        unsafe {
            assert_eq!(stp_matrix_new_rational(2, 4, num.as_ptr(), den.as_ptr(), &mut a), StpStatus::Ok);
            assert_eq!(stp_matrix_is_rational(a), 1);
            let (re, im) = ([1.0, 0.0, 0.0], [0.0; 3]);
            assert_eq!(stp_matrix_new_complex(3, 1, re.as_ptr(), im.as_ptr(), &mut x), StpStatus::Ok);
            assert_eq!(stp_annihilator(a, x, 100, &mut p), StpStatus::NonRational);
            stp_matrix_free(x);
            x = parse("1; 0; 0");
            assert_eq!(stp_annihilator(a, x, 100, &mut p), StpStatus::Ok);
            assert_eq!(text(p), "0 1 2 -2 -2 1");
            let mut s = ptr::null_mut();
            assert_eq!(stp_spectrum(a, 6, &mut s), StpStatus::Ok);
            assert_eq!(stp_matrix_rows(s), 6);
            for m in [a, x, p, s] {
                stp_matrix_free(m);
            }
        }
    }
}
