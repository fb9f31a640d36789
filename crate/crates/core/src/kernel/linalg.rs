//! Elimination-based linear algebra: reduced row echelon form, rank, null
//! spaces, determinants and inverses. Exact over rationals; over floats a
//! pivot whose modulus is at most `tol` counts as zero.

use super::dense::Mat;
use super::scalar::Field;
use crate::error::{Error, Result};

pub struct Rref<T> {
    pub matrix: Mat<T>,
    pub pivots: Vec<usize>,
}

pub fn rref<T: Field>(a: &Mat<T>, tol: f64) -> Rref<T> {
    let (m, n) = a.shape();
    let mut rows = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        let (best, mag) = (r..m)
            .map(|i| (i, rows[i][col].magnitude()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if rows[best][col].near_zero(tol) || mag <= 0.0 {
            for row in rows.iter_mut().skip(r) {
                row[col] = T::zero();
            }
            continue;
        }
        rows.swap(r, best);
        let inv = T::one() / rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..m {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in 0..n {
                let d = f.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - d;
            }
            rows[i][col] = T::zero();
        }
        pivots.push(col);
        r += 1;
    }
    Rref {
        matrix: Mat::from_rows(rows).expect("shape preserved"),
        pivots,
    }
}

pub fn rank<T: Field>(a: &Mat<T>, tol: f64) -> usize {
    rref(a, tol).pivots.len()
}

/// A basis of `{x : a·x = 0}` as column matrices, one per free variable.
pub fn nullspace<T: Field>(a: &Mat<T>, tol: f64) -> Vec<Mat<T>> {
    let n = a.cols();
    let Rref { matrix, pivots } = rref(a, tol);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(r, f).clone();
            }
            Mat::column_vector(v).expect("nonempty")
        })
        .collect()
}

/// Solves `a·x = b` for a single right-hand side when the system is
/// consistent; returns the particular solution with free variables at zero.
pub fn solve<T: Field>(a: &Mat<T>, b: &Mat<T>, tol: f64) -> Option<Mat<T>> {
    let (m, n) = a.shape();
    assert_eq!(b.shape(), (m, 1), "right-hand side must be a column of matching height");
    let aug = Mat::from_fn(m, n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b.get(i, 0).clone()
        }
    });
    let Rref { matrix, pivots } = rref(&aug, tol);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = matrix.get(r, n).clone();
    }
    Some(Mat::column_vector(x).expect("nonempty"))
}

/// Coefficients `c` with `v = Σ c_j·cols[j]`, if `v` lies in their span.
pub fn express_in<T: Field>(cols: &[Mat<T>], v: &Mat<T>, tol: f64) -> Option<Vec<T>> {
    if cols.is_empty() {
        return v.near_zero(tol).then(Vec::new);
    }
    let a = Mat::from_fn(v.rows(), cols.len(), |i, j| cols[j].get(i, 0).clone());
    solve(&a, v, tol).map(Mat::into_data)
}

fn require_square<T: Field>(a: &Mat<T>) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    Ok(a.rows())
}

pub fn det<T: Field>(a: &Mat<T>) -> Result<T> {
    let n = require_square(a)?;
    let mut rows = a.to_rows();
    let mut d = T::one();
    for col in 0..n {
        let best = (col..n)
            .max_by(|&i, &j| {
                rows[i][col]
                    .magnitude()
                    .partial_cmp(&rows[j][col].magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonempty range");
        if rows[best][col].is_zero() {
            return Ok(T::zero());
        }
        if best != col {
            rows.swap(best, col);
            d = -d;
        }
        let p = rows[col][col].clone();
        d = d * p.clone();
        for i in col + 1..n {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone() / p.clone();
            for j in col..n {
                let v = f.clone() * rows[col][j].clone();
                rows[i][j] = rows[i][j].clone() - v;
            }
        }
    }
    Ok(d)
}

pub fn inverse<T: Field>(a: &Mat<T>) -> Result<Mat<T>> {
    let n = require_square(a)?;
    let aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            T::one()
        } else {
            T::zero()
        }
    });
    // Exact zero test only: a float pivot is accepted unless it vanishes.
    let Rref { matrix, pivots } = rref(&aug, 0.0);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(matrix.block(0, n, n, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{q, qr, Rational};

    type M = Mat<Rational>;

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = M::from_i64_rows(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3·-2 - 4·5) + 1(1·-2 - 0) = 2(-26) - 2 = -54
        assert_eq!(det(&a).unwrap(), q(-54));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = M::from_i64_rows(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.matmul(&inv).unwrap(), M::identity(2));
        assert_eq!(inverse(&M::from_i64_rows(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = M::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 0.0);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(a.matmul(&v).unwrap().is_zero());
        }
        assert_eq!(rank(&a, 0.0), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = M::from_i64_rows(&[&[1, 1], &[1, -1]]);
        let b = M::column_vector(vec![q(3), q(1)]).unwrap();
        assert_eq!(solve(&a, &b, 0.0).unwrap(), M::column_vector(vec![q(2), q(1)]).unwrap());
        let s = M::from_i64_rows(&[&[1, 1], &[2, 2]]);
        assert!(solve(&s, &b, 0.0).is_none());
        let half = M::column_vector(vec![qr(1, 2), q(1)]).unwrap();
        assert!(solve(&s, &half, 0.0).unwrap().get(0, 0) == &qr(1, 2));
    }
}
