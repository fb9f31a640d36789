//! Semi-tensor products and semi-tensor additions of concrete matrices.
//!
//! For `A` of size `m×n` and `B` of size `p×q` with `t = lcm(n, p)`:
//!
//! ```text
//! A ⋉ B = (A ⊗ I_{t/n}) (B ⊗ I_{t/p})      left product
//! A ⋊ B = (I_{t/n} ⊗ A) (I_{t/p} ⊗ B)      right product
//! ```
//!
//! The additions need a shared row/column ratio and pad each operand up to
//! the least common row count.

use num_integer::Integer;

use super::dense::Mat;
use super::scalar::Field;
use crate::error::{Error, Result};

pub fn stp_left<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    let n = a.cols();
    let p = b.rows();
    let t = n.lcm(&p);
    a.kron_identity(t / n)
        .matmul(&b.kron_identity(t / p))
        .expect("padded factors are conformable")
}

pub fn stp_right<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    let n = a.cols();
    let p = b.rows();
    let t = n.lcm(&p);
    a.identity_kron(t / n)
        .matmul(&b.identity_kron(t / p))
        .expect("padded factors are conformable")
}

fn check_ratio<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<()> {
    let (m, n) = a.shape();
    let (p, q) = b.shape();
    if m * q != n * p {
        return Err(Error::MuMismatch {
            left: (m, n),
            right: (p, q),
        });
    }
    Ok(())
}

/// `(A ⊗ I_{t/m}) + (B ⊗ I_{t/p})` with `t = lcm(m, p)`.
pub fn sta_left<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    check_ratio(a, b)?;
    let t = a.rows().lcm(&b.rows());
    a.kron_identity(t / a.rows()).add(&b.kron_identity(t / b.rows()))
}

/// `(I_{t/m} ⊗ A) + (I_{t/p} ⊗ B)` with `t = lcm(m, p)`.
pub fn sta_right<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    check_ratio(a, b)?;
    let t = a.rows().lcm(&b.rows());
    a.identity_kron(t / a.rows()).add(&b.identity_kron(t / b.rows()))
}

/// Semi-tensor subtraction `A ⊟ B = A ⊞ (−B)`.
pub fn sts_left<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    sta_left(a, &b.neg())
}

pub fn sts_right<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    sta_right(a, &b.neg())
}

/// The swap matrix `W_[m,n]`, the `mn×mn` permutation with
/// `W_[m,n] (X ⊗ Y) = Y ⊗ X` for `X ∈ F^m`, `Y ∈ F^n`.
pub fn swap_matrix<T: Field>(m: usize, n: usize) -> Mat<T> {
    assert!(m >= 1 && n >= 1, "swap matrix dimensions must be positive");
    // Column i·n + j carries a one in row j·m + i.
    Mat::from_fn(m * n, m * n, |r, c| {
        let (i, j) = (c / n, c % n);
        if r == j * m + i {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// Row-by-column product of the multiplier monoid: defined only when one of
/// `cols(a)`, `rows(b)` divides the other. Agrees with [`stp_left`] there.
pub fn stp_blockwise<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    let (m, n) = a.shape();
    let (p, q) = b.shape();
    if n % p == 0 {
        // Each row splits into p blocks of length t; c_ij is a 1×t row.
        let t = n / p;
        Ok(Mat::from_fn(m, q * t, |i, jl| {
            let (j, l) = (jl / t, jl % t);
            (0..p).fold(T::zero(), |acc, s| {
                acc + a.get(i, s * t + l).clone() * b.get(s, j).clone()
            })
        }))
    } else if p % n == 0 {
        // Each column splits into n blocks of length t; c_ij is a t×1 column.
        let t = p / n;
        Ok(Mat::from_fn(m * t, q, |il, j| {
            let (i, l) = (il / t, il % t);
            (0..n).fold(T::zero(), |acc, s| {
                acc + a.get(i, s).clone() * b.get(s * t + l, j).clone()
            })
        }))
    } else {
        Err(Error::DimensionMismatch {
            op: "stp_blockwise",
            left: a.shape(),
            right: b.shape(),
        })
    }
}
