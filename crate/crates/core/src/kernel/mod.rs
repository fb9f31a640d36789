//! Scalars, dense matrices, Kronecker/swap machinery, Frobenius products and
//! the semi-tensor product and addition on concrete matrices.

pub mod dense;
pub mod eigen;
pub mod funcs;
pub mod linalg;
pub mod predicates;
pub mod products;
pub mod scalar;
pub mod stp;

pub use dense::Mat;
pub use funcs::{mat_cos, mat_exp, mat_log, mat_sin, MatFn};
pub use predicates::{predicates, MatrixFlags};
pub use products::{frobenius_ip, gen_frobenius_block_ip};
pub use scalar::{Complex, Field, Rational, Scalar, ScalarKind, DEFAULT_TOL};
pub use stp::{
    sta_left, sta_right, stp_blockwise, stp_left, stp_right, sts_left, sts_right, swap_matrix,
};

/// Kronecker product; kept as a free function alongside the other products.
pub fn kron<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    a.kron(b)
}
