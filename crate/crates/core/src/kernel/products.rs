//! Frobenius inner products, ordinary and block-generalized.

use num_integer::Integer;

use super::dense::Mat;
use super::scalar::Field;
use crate::error::{Error, Result};

/// `Σ conj(a_ij)·b_ij`; conjugation is a no-op over rationals.
pub fn frobenius_ip<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<T> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op: "frobenius_ip",
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(a.data()
        .iter()
        .zip(b.data())
        .fold(T::zero(), |acc, (x, y)| acc + x.conj() * y.clone()))
}

/// Frobenius product of the `h×w` blocks of `a` at `(ai, aj)` and of `b` at
/// `(bi, bj)`, without materialising either block.
pub(crate) fn block_frobenius<T: Field>(
    a: &Mat<T>,
    (ai, aj): (usize, usize),
    b: &Mat<T>,
    (bi, bj): (usize, usize),
    (h, w): (usize, usize),
) -> T {
    let mut acc = T::zero();
    for i in 0..h {
        for j in 0..w {
            acc = acc + a.get(ai + i, aj + j).conj() * b.get(bi + i, bj + j).clone();
        }
    }
    acc
}

/// Block matrix of Frobenius products between the `α×β` blocks of `a` and of
/// `b`, where `α = gcd(m, p)` and `β = gcd(n, q)`.
///
/// `a` splits into a `ξ×η` grid and `b` into an `r×s` grid; entry
/// `(i·r + k, j·s + l)` of the result is `(A_ij | B_kl)_F`, so the output is
/// `(ξr)×(ηs)`. When `m | p` and `n | q` the grid of `a` is a single block and
/// this is the plain `r×s` table of `(A | B_kl)_F`.
pub fn gen_frobenius_block_ip<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    let (m, n) = a.shape();
    let (p, q) = b.shape();
    let alpha = m.gcd(&p);
    let beta = n.gcd(&q);
    let (xi, eta) = (m / alpha, n / beta);
    let (r, s) = (p / alpha, q / beta);
    Mat::from_fn(xi * r, eta * s, |row, col| {
        let (i, k) = (row / r, row % r);
        let (j, l) = (col / s, col % s);
        block_frobenius(
            a,
            (i * alpha, j * beta),
            b,
            (k * alpha, l * beta),
            (alpha, beta),
        )
    })
}
