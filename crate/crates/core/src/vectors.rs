//! Vector equivalence under `⊗ 1_s`, dimension-free vector addition and
//! inner product, and the vector product of a matrix with a vector.

use num_integer::Integer;

use crate::equivalence::{MatClass, Side};
use crate::error::{Error, Result};
use crate::kernel::scalar::{Field, DEFAULT_TOL};
use crate::kernel::Mat;

/// A vector-equivalence class, held as its irreducible root.
#[derive(Debug, Clone, PartialEq)]
pub struct VecClass<T> {
    root: Mat<T>,
    side: Side,
}

impl<T: Field> VecClass<T> {
    pub fn root(&self) -> &Mat<T> {
        &self.root
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.root.rows()
    }

    /// The member `root ⊗ 1_s` (or `1_s ⊗ root`).
    pub fn representative(&self, s: usize) -> Mat<T> {
        stretch(&self.root, s, self.side)
    }

    pub fn same_as(&self, other: &VecClass<T>, tol: f64) -> bool {
        self.side == other.side && self.root.near(&other.root, tol)
    }
}

fn stretch<T: Field>(x: &Mat<T>, s: usize, side: Side) -> Mat<T> {
    match side {
        Side::Left => x.kron_ones(s),
        Side::Right => x.ones_kron(s),
    }
}

fn require_column<T: Field>(x: &Mat<T>) -> Result<()> {
    if !x.is_column() {
        return Err(Error::NotColumn { cols: x.cols() });
    }
    Ok(())
}

/// Largest `s` with `v = Γ ⊗ 1_s` (rows repeated in runs of `s`), or
/// `v = 1_s ⊗ Γ` on the right; works for any number of columns.
pub fn row_root<T: Field>(v: &Mat<T>, side: Side, tol: f64) -> (Mat<T>, usize) {
    let (p, q) = v.shape();
    let mut divisors: Vec<usize> = (1..=p).filter(|s| p % s == 0).collect();
    divisors.reverse();
    for s in divisors {
        let h = p / s;
        let source = |i: usize| match side {
            Side::Left => (i / s) * s,
            Side::Right => i % h,
        };
        let ok = (0..p).all(|i| (0..q).all(|j| v.get(i, j).near(v.get(source(i), j), tol)));
        if ok {
            let root = match side {
                Side::Left => Mat::from_fn(h, q, |i, j| v.get(i * s, j).clone()),
                Side::Right => v.block(0, 0, h, q),
            };
            return (root, s);
        }
    }
    unreachable!("s = 1 always reduces")
}

pub fn vec_root<T: Field>(x: &Mat<T>, side: Side) -> Result<VecClass<T>> {
    Ok(vec_root_with_factor(x, side, DEFAULT_TOL)?.0)
}

pub fn vec_root_with_factor<T: Field>(
    x: &Mat<T>,
    side: Side,
    tol: f64,
) -> Result<(VecClass<T>, usize)> {
    require_column(x)?;
    let (root, s) = row_root(x, side, tol);
    Ok((VecClass { root, side }, s))
}

pub fn vec_equivalent<T: Field>(x: &Mat<T>, y: &Mat<T>, side: Side) -> Result<bool> {
    Ok(vec_root(x, side)?.same_as(&vec_root(y, side)?, DEFAULT_TOL))
}

fn vec_lattice<T: Field>(
    x: &Mat<T>,
    y: &Mat<T>,
    side: Side,
    op: impl Fn(usize, usize) -> usize,
) -> Result<Mat<T>> {
    let (rx, p) = vec_root_with_factor(x, side, DEFAULT_TOL)?;
    let (ry, q) = vec_root_with_factor(y, side, DEFAULT_TOL)?;
    if !rx.same_as(&ry, DEFAULT_TOL) {
        return Err(Error::NotEquivalent);
    }
    Ok(rx.representative(op(p, q)))
}

pub fn vec_gcd<T: Field>(x: &Mat<T>, y: &Mat<T>, side: Side) -> Result<Mat<T>> {
    vec_lattice(x, y, side, |p, q| p.gcd(&q))
}

pub fn vec_lcm<T: Field>(x: &Mat<T>, y: &Mat<T>, side: Side) -> Result<Mat<T>> {
    vec_lattice(x, y, side, |p, q| p.lcm(&q))
}

/// `x ⊗ 1_{t/p} + y ⊗ 1_{t/q}` with `t = lcm(p, q)`.
pub fn vadd<T: Field>(x: &Mat<T>, y: &Mat<T>) -> Result<Mat<T>> {
    vadd_side(x, y, Side::Left)
}

pub fn vadd_side<T: Field>(x: &Mat<T>, y: &Mat<T>, side: Side) -> Result<Mat<T>> {
    require_column(x)?;
    require_column(y)?;
    let (p, q) = (x.rows(), y.rows());
    let t = p.lcm(&q);
    stretch(x, t / p, side).add(&stretch(y, t / q, side))
}

pub fn vsub<T: Field>(x: &Mat<T>, y: &Mat<T>) -> Result<Mat<T>> {
    vadd(x, &y.neg())
}

/// `(1/t)·⟨x ⊗ 1_{t/p}, y ⊗ 1_{t/q}⟩`.
pub fn vec_weighted_ip<T: Field>(x: &Mat<T>, y: &Mat<T>) -> Result<T> {
    require_column(x)?;
    require_column(y)?;
    let (p, q) = (x.rows(), y.rows());
    let t = p.lcm(&q);
    let (sx, sy) = (t / p, t / q);
    let sum = (0..t).fold(T::zero(), |acc, k| {
        acc + x.get(k / sx, 0).conj() * y.get(k / sy, 0).clone()
    });
    Ok(sum * T::from_ratio(1, t as i64))
}

/// `(A ⊗ I_{t/n})(V ⊗ 1_{t/p})` with `t = lcm(n, p)`, for any `p×q` block `V`.
pub fn vprod_mat<T: Field>(a: &Mat<T>, v: &Mat<T>) -> Mat<T> {
    let (m, n) = a.shape();
    let (p, q) = v.shape();
    let t = n.lcm(&p);
    let (k, s) = (t / n, t / p);
    let mut out = Mat::zeros(m * k, q);
    for i in 0..m {
        for r in 0..k {
            for c in 0..q {
                let mut acc = T::zero();
                for j in 0..n {
                    let aij = a.get(i, j);
                    if aij.is_zero() {
                        continue;
                    }
                    acc = acc + aij.clone() * v.get((j * k + r) / s, c).clone();
                }
                out.set(i * k + r, c, acc);
            }
        }
    }
    out
}

/// `(I_{t/n} ⊗ A)(1_{t/p} ⊗ V)`.
pub fn vprod_mat_right<T: Field>(a: &Mat<T>, v: &Mat<T>) -> Mat<T> {
    let (n, p) = (a.cols(), v.rows());
    let t = n.lcm(&p);
    a.identity_kron(t / n)
        .matmul(&v.ones_kron(t / p))
        .expect("inner dimensions agree")
}

/// The vector product of a matrix with a column vector.
pub fn vprod<T: Field>(a: &Mat<T>, x: &Mat<T>) -> Result<Mat<T>> {
    require_column(x)?;
    Ok(vprod_mat(a, x))
}

pub fn vprod_right<T: Field>(a: &Mat<T>, x: &Mat<T>) -> Result<Mat<T>> {
    require_column(x)?;
    Ok(vprod_mat_right(a, x))
}

/// Class-level vector product: acts with the root of `a` on `v` and reduces
/// the result under `⊗ 1_s`.
pub fn vprod_class<T: Field>(a: &MatClass<T>, v: &Mat<T>) -> Mat<T> {
    let side = a.side();
    let w = match side {
        Side::Left => vprod_mat(a.root(), v),
        Side::Right => vprod_mat_right(a.root(), v),
    };
    row_root(&w, side, DEFAULT_TOL).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::root_of;
    use crate::kernel::scalar::{c, q, qr, Complex, Rational};

    type M = Mat<Rational>;

    fn col(v: &[i64]) -> M {
        M::column_vector(v.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn roots() {
        assert_eq!(vec_root(&col(&[1, 1, 1]), Side::Left).unwrap().root(), &col(&[1]));
        assert_eq!(vec_root(&col(&[1, 1, 2, 2]), Side::Left).unwrap().root(), &col(&[1, 2]));
        assert_eq!(vec_root(&col(&[1, 2]), Side::Left).unwrap().root(), &col(&[1, 2]));
        assert_eq!(vec_root(&col(&[1, 2, 1, 2]), Side::Right).unwrap().root(), &col(&[1, 2]));
        assert_eq!(
            vec_root(&M::identity(2), Side::Left),
            Err(Error::NotColumn { cols: 2 })
        );
    }

    #[test]
    fn equivalence_and_lattice() {
        let g = col(&[1, 2]);
        assert!(vec_equivalent(&g, &g.kron_ones(3), Side::Left).unwrap());
        assert!(!vec_equivalent(&g, &col(&[2, 1]), Side::Left).unwrap());
        assert_eq!(vec_gcd(&g.kron_ones(2), &g.kron_ones(3), Side::Left).unwrap(), g);
        assert_eq!(vec_lcm(&g.kron_ones(2), &g.kron_ones(3), Side::Left).unwrap(), g.kron_ones(6));
    }

    #[test]
    fn addition() {
        assert_eq!(vadd(&col(&[1, 2]), &col(&[1, 1, 1])).unwrap(), col(&[2, 2, 2, 3, 3, 3]));
        assert!(vsub(&col(&[1, 2]), &col(&[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn inner_product() {
        assert_eq!(vec_weighted_ip(&col(&[1, 1]), &col(&[1, 1, 1])).unwrap(), q(1));
        assert_eq!(vec_weighted_ip(&col(&[1, 0]), &col(&[0, 1, 0])).unwrap(), qr(1, 6));
        let x = col(&[1, -2, 3]);
        assert_eq!(
            vec_weighted_ip(&x, &x.kron_ones(4)).unwrap(),
            vec_weighted_ip(&x, &x).unwrap()
        );
    }

    #[test]
    fn vector_product_examples() {
        let a = M::from_i64_rows(&[&[1, -1, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(vprod(&a, &M::delta(6, 1)).unwrap(), col(&[1, 1, 0, 0, 0, 0]));
        let ac = a.to_complex();
        let x = Mat::column_vector(vec![
            c(1.0, 1.0),
            c(2.0, 0.0),
            c(1.0, -1.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ])
        .unwrap();
        let want = x.scale(&Complex::new(0.0, 1.0));
        assert!(vprod(&ac, &x).unwrap().near(&want, 1e-15));
        let sq = M::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(vprod(&sq, &col(&[1, 1])).unwrap(), col(&[3, 7]));
    }

    #[test]
    fn vprod_matches_kronecker_definition() {
        let a = M::from_i64_rows(&[&[1, 2, 0], &[0, -1, 3]]);
        let v = M::from_i64_rows(&[&[1, 0], &[2, 1]]);
        let direct = a.kron_identity(2).matmul(&v.kron_ones(3)).unwrap();
        assert_eq!(vprod_mat(&a, &v), direct);
    }

    #[test]
    fn class_product_is_representative_free() {
        let a = M::from_i64_rows(&[&[1, 2, 0, 1], &[0, 1, 1, 1]]);
        let x = col(&[1, 0, 2]);
        let base = vprod_class(&root_of(&a, Side::Left), &x);
        let lifted = row_root(&vprod_mat(&a.kron_identity(2), &x.kron_ones(3)), Side::Left, 0.0).0;
        assert_eq!(base, row_root(&vprod_mat(&a, &x), Side::Left, 0.0).0);
        assert_eq!(lifted, base);
    }
}
