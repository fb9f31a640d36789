use super::dense::Mat;
use super::scalar::Field;

/// Structural predicates of a single matrix. Square-only predicates are
/// `false` for non-square input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatrixFlags {
    /// Every column is some `δ_m^i`.
    pub is_logical: bool,
    /// Every entry is 0 or 1.
    pub is_boolean: bool,
    /// Nonnegative real entries with unit column sums.
    pub is_probabilistic: bool,
    pub is_symmetric: bool,
    pub is_skew: bool,
    pub is_upper_triangular: bool,
    pub is_strictly_upper_triangular: bool,
    pub is_diagonal: bool,
    pub is_orthogonal: bool,
}

pub fn predicates<T: Field>(a: &Mat<T>, tol: f64) -> MatrixFlags {
    let (m, n) = a.shape();
    let zero = T::zero();
    let one = T::one();
    let is_01 = |x: &T| x.near(&zero, tol) || x.near(&one, tol);
    let is_boolean = a.data().iter().all(is_01);
    let is_logical = is_boolean
        && (0..n).all(|j| (0..m).filter(|&i| a.get(i, j).near(&one, tol)).count() == 1);
    let is_probabilistic = (0..n).all(|j| {
        let mut sum = T::zero();
        for i in 0..m {
            let z = a.get(i, j).to_complex();
            if z.re < -tol || z.im.abs() > tol {
                return false;
            }
            sum = sum + a.get(i, j).clone();
        }
        sum.near(&one, tol)
    });

    let square = a.is_square();
    let all_pairs = |f: &dyn Fn(usize, usize) -> bool| (0..m).all(|i| (0..n).all(|j| f(i, j)));
    let is_symmetric = square && all_pairs(&|i, j| a.get(i, j).near(a.get(j, i), tol));
    let is_skew = square && all_pairs(&|i, j| a.get(i, j).near(&-a.get(j, i).clone(), tol));
    let is_upper_triangular = square && all_pairs(&|i, j| i <= j || a.get(i, j).near_zero(tol));
    let is_strictly_upper_triangular =
        square && all_pairs(&|i, j| i < j || a.get(i, j).near_zero(tol));
    let is_diagonal = square && all_pairs(&|i, j| i == j || a.get(i, j).near_zero(tol));
    let is_orthogonal = square
        && a.transpose()
            .matmul(a)
            .map(|p| p.near(&Mat::identity(m), tol))
            .unwrap_or(false);

    MatrixFlags {
        is_logical,
        is_boolean,
        is_probabilistic,
        is_symmetric,
        is_skew,
        is_upper_triangular,
        is_strictly_upper_triangular,
        is_diagonal,
        is_orthogonal,
    }
}
