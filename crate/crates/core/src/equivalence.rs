//! Matrix equivalence classes: irreducible roots, lattice gcd/lcm, the
//! embedding `bd_k` with its projection `pr_k`, and the leaf basis.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::kernel::scalar::{Complex, Field, DEFAULT_TOL};
use crate::kernel::Mat;

/// Which equivalence: `A ⊗ I_s` (left) or `I_s ⊗ A` (right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Side {
    #[default]
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(Error::InvalidArgument(format!("unknown side '{s}'"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Dimensions of a matrix split as `leaf · (mu_y, mu_x)` with coprime ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub rows: usize,
    pub cols: usize,
    pub mu_y: usize,
    pub mu_x: usize,
    pub leaf: usize,
}

impl Shape {
    pub fn new(rows: usize, cols: usize) -> Result<Shape> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let leaf = rows.gcd(&cols);
        Ok(Shape {
            rows,
            cols,
            mu_y: rows / leaf,
            mu_x: cols / leaf,
            leaf,
        })
    }

    pub fn of<T: Field>(a: &Mat<T>) -> Shape {
        Shape::new(a.rows(), a.cols()).expect("matrices are nonempty")
    }

    pub fn mu(&self) -> (usize, usize) {
        (self.mu_y, self.mu_x)
    }
}

/// An equivalence class, held as its irreducible root.
#[derive(Debug, Clone, PartialEq)]
pub struct MatClass<T> {
    root: Mat<T>,
    mu: (usize, usize),
    side: Side,
}

impl<T: Field> MatClass<T> {
    pub fn root(&self) -> &Mat<T> {
        &self.root
    }

    pub fn into_root(self) -> Mat<T> {
        self.root
    }

    pub fn mu(&self) -> (usize, usize) {
        self.mu
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Leaf index of the root, i.e. `gcd(rows, cols)`.
    pub fn leaf(&self) -> usize {
        Shape::of(&self.root).leaf
    }

    pub fn is_square(&self) -> bool {
        self.mu == (1, 1)
    }

    /// The member `root ⊗ I_k` (or `I_k ⊗ root`).
    pub fn representative(&self, k: usize) -> Mat<T> {
        embed(&self.root, k, self.side)
    }

    /// Two classes are equal when their roots agree (within `tol` for floats).
    pub fn same_as(&self, other: &MatClass<T>, tol: f64) -> bool {
        self.side == other.side && self.root.near(&other.root, tol)
    }
}

pub(crate) fn embed<T: Field>(a: &Mat<T>, k: usize, side: Side) -> Mat<T> {
    match side {
        Side::Left => a.kron_identity(k),
        Side::Right => a.identity_kron(k),
    }
}

fn divisors_desc(n: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=n).filter(|s| n % s == 0).collect();
    d.reverse();
    d
}

/// `Some(Λ)` when `a = Λ ⊗ I_s`.
fn left_factor<T: Field>(a: &Mat<T>, s: usize, tol: f64) -> Option<Mat<T>> {
    let (m, n) = a.shape();
    let zero = T::zero();
    for bi in 0..m / s {
        for bj in 0..n / s {
            let lam = a.get(bi * s, bj * s);
            for u in 0..s {
                for v in 0..s {
                    let x = a.get(bi * s + u, bj * s + v);
                    let want = if u == v { lam } else { &zero };
                    if !x.near(want, tol) {
                        return None;
                    }
                }
            }
        }
    }
    Some(Mat::from_fn(m / s, n / s, |i, j| a.get(i * s, j * s).clone()))
}

/// `Some(Λ)` when `a = I_s ⊗ Λ`.
fn right_factor<T: Field>(a: &Mat<T>, s: usize, tol: f64) -> Option<Mat<T>> {
    let (m, n) = a.shape();
    let (h, w) = (m / s, n / s);
    for i in 0..m {
        for j in 0..n {
            let x = a.get(i, j);
            let ok = if i / h == j / w {
                x.near(a.get(i % h, j % w), tol)
            } else {
                x.near_zero(tol)
            };
            if !ok {
                return None;
            }
        }
    }
    Some(a.block(0, 0, h, w))
}

/// Irreducible root and the factor `s` with `a = root ⊗ I_s`.
pub fn root_with_factor<T: Field>(a: &Mat<T>, side: Side, tol: f64) -> (MatClass<T>, usize) {
    let shape = Shape::of(a);
    for s in divisors_desc(shape.leaf) {
        let found = match side {
            Side::Left => left_factor(a, s, tol),
            Side::Right => right_factor(a, s, tol),
        };
        if let Some(root) = found {
            let class = MatClass {
                root,
                mu: shape.mu(),
                side,
            };
            return (class, s);
        }
    }
    unreachable!("s = 1 always factors")
}

pub fn root_of<T: Field>(a: &Mat<T>, side: Side) -> MatClass<T> {
    root_of_tol(a, side, DEFAULT_TOL)
}

pub fn root_of_tol<T: Field>(a: &Mat<T>, side: Side, tol: f64) -> MatClass<T> {
    root_with_factor(a, side, tol).0
}

pub fn equivalent<T: Field>(a: &Mat<T>, b: &Mat<T>, side: Side) -> bool {
    equivalent_tol(a, b, side, DEFAULT_TOL)
}

pub fn equivalent_tol<T: Field>(a: &Mat<T>, b: &Mat<T>, side: Side, tol: f64) -> bool {
    root_of_tol(a, side, tol).same_as(&root_of_tol(b, side, tol), tol)
}

fn lattice_op<T: Field>(
    a: &Mat<T>,
    b: &Mat<T>,
    side: Side,
    tol: f64,
    op: impl Fn(usize, usize) -> usize,
) -> Result<Mat<T>> {
    let (ra, p) = root_with_factor(a, side, tol);
    let (rb, q) = root_with_factor(b, side, tol);
    if !ra.same_as(&rb, tol) {
        return Err(Error::NotEquivalent);
    }
    Ok(ra.representative(op(p, q)))
}

/// Meet of two equivalent matrices: `Λ ⊗ I_gcd(p,q)`.
pub fn class_gcd<T: Field>(a: &Mat<T>, b: &Mat<T>, side: Side) -> Result<Mat<T>> {
    lattice_op(a, b, side, DEFAULT_TOL, |p, q| p.gcd(&q))
}

/// Join of two equivalent matrices: `Λ ⊗ I_lcm(p,q)`.
pub fn class_lcm<T: Field>(a: &Mat<T>, b: &Mat<T>, side: Side) -> Result<Mat<T>> {
    lattice_op(a, b, side, DEFAULT_TOL, |p, q| p.lcm(&q))
}

/// Embedding `a ↦ a ⊗ I_k`.
pub fn bd<T: Field>(a: &Mat<T>, k: usize) -> Mat<T> {
    a.kron_identity(k)
}

/// Projection averaging the diagonal of each `k×k` block.
pub fn pr<T: Field>(a: &Mat<T>, k: usize) -> Result<Mat<T>> {
    let (m, n) = a.shape();
    if k == 0 || m % k != 0 || n % k != 0 {
        return Err(Error::IndivisibleShape { rows: m, cols: n, k });
    }
    let inv = T::from_ratio(1, k as i64);
    Ok(Mat::from_fn(m / k, n / k, |bi, bj| {
        let mut s = T::zero();
        for d in 0..k {
            s = s + a.get(bi * k + d, bj * k + d).clone();
        }
        s * inv.clone()
    }))
}

/// Which family a leaf-basis element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Unit entry at off-diagonal position `(i, j)` of the block.
    OffDiagonal { i: usize, j: usize },
    /// `I_k / √k` on the block.
    Scalar,
    /// The `t`-th traceless diagonal element, `t = 2..=k`.
    Traceless { t: usize },
}

#[derive(Debug, Clone)]
pub struct BasisElement {
    /// Block position `(I, J)`, zero-based.
    pub block: (usize, usize),
    pub kind: BasisKind,
    pub matrix: Mat<Complex>,
}

/// Frobenius-orthonormal basis of the leaf `αk·μ` adapted to its
/// `k×k` block structure.
#[derive(Debug, Clone)]
pub struct LeafBasis {
    pub alpha: usize,
    pub k: usize,
    pub mu: (usize, usize),
    pub elements: Vec<BasisElement>,
}

pub fn leaf_basis(alpha: usize, k: usize, mu: (usize, usize)) -> Result<LeafBasis> {
    if alpha == 0 || k == 0 || mu.0 == 0 || mu.1 == 0 {
        return Err(Error::InvalidArgument("leaf basis parameters must be positive".into()));
    }
    if mu.0.gcd(&mu.1) != 1 {
        return Err(Error::InvalidArgument(format!("ratio {mu:?} is not reduced")));
    }
    let (bh, bw) = (alpha * mu.0, alpha * mu.1);
    let (rows, cols) = (bh * k, bw * k);
    let mut elements = Vec::with_capacity(bh * bw * k * k);
    for bi in 0..bh {
        for bj in 0..bw {
            let place = |diag: &dyn Fn(usize, usize) -> f64| {
                Mat::from_fn(rows, cols, |r, c| {
                    if r / k == bi && c / k == bj {
                        Complex::new(diag(r % k, c % k), 0.0)
                    } else {
                        Complex::new(0.0, 0.0)
                    }
                })
            };
            let root_k = (k as f64).sqrt();
            elements.push(BasisElement {
                block: (bi, bj),
                kind: BasisKind::Scalar,
                matrix: place(&|u, v| if u == v { 1.0 / root_k } else { 0.0 }),
            });
            for t in 2..=k {
                let norm = ((t * (t - 1)) as f64).sqrt();
                elements.push(BasisElement {
                    block: (bi, bj),
                    kind: BasisKind::Traceless { t },
                    matrix: place(&|u, v| {
                        if u != v || u >= t {
                            0.0
                        } else if u + 1 < t {
                            1.0 / norm
                        } else {
                            -((t - 1) as f64) / norm
                        }
                    }),
                });
            }
            for i in 0..k {
                for j in 0..k {
                    if i != j {
                        elements.push(BasisElement {
                            block: (bi, bj),
                            kind: BasisKind::OffDiagonal { i, j },
                            matrix: place(&|u, v| if u == i && v == j { 1.0 } else { 0.0 }),
                        });
                    }
                }
            }
        }
    }
    Ok(LeafBasis {
        alpha,
        k,
        mu,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::products::frobenius_ip;
    use crate::kernel::scalar::{q, Rational};

    type M = Mat<Rational>;

    #[test]
    fn identity_reduces_to_one() {
        let c = root_of(&M::identity(4), Side::Left);
        assert_eq!(c.root(), &M::from_i64_rows(&[&[1]]));
        assert_eq!(c.mu(), (1, 1));
        let r = root_of(&M::identity(4), Side::Right);
        assert_eq!(r.root(), &M::from_i64_rows(&[&[1]]));
    }

    #[test]
    fn left_and_right_roots_differ() {
        let a = M::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let left = a.kron_identity(3);
        assert_eq!(root_of(&left, Side::Left).root(), &a);
        assert_eq!(root_of(&left, Side::Right).root(), &left);
        let right = a.identity_kron(2);
        assert_eq!(root_of(&right, Side::Right).root(), &a);
        assert_eq!(root_of(&right, Side::Left).root(), &right);
    }

    #[test]
    fn rectangular_root() {
        let a = M::from_i64_rows(&[&[1, 0, 2]]);
        let (c, s) = root_with_factor(&a.kron_identity(4), Side::Left, 0.0);
        assert_eq!((c.root(), s), (&a, 4));
        assert_eq!(c.mu(), (1, 3));
    }

    #[test]
    fn equivalence_and_lattice() {
        let a = M::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert!(equivalent(&a, &a.kron_identity(5), Side::Left));
        assert!(!equivalent(&a, &M::identity(2), Side::Left));
        let (a2, a3) = (a.kron_identity(2), a.kron_identity(3));
        assert_eq!(class_gcd(&a2, &a3, Side::Left).unwrap(), a);
        assert_eq!(class_lcm(&a2, &a3, Side::Left).unwrap(), a.kron_identity(6));
        assert_eq!(
            class_gcd(&a, &M::identity(2), Side::Left),
            Err(Error::NotEquivalent)
        );
    }

    #[test]
    fn projection_inverts_embedding() {
        let c = M::from_i64_rows(&[&[1, -2, 3]]);
        assert_eq!(pr(&bd(&c, 3), 3).unwrap(), c);
        let a = M::from_i64_rows(&[&[1, 2], &[3, 5]]);
        assert_eq!(pr(&a, 2).unwrap(), M::new(1, 1, vec![q(3)]).unwrap());
        assert!(matches!(pr(&M::zeros(2, 3), 2), Err(Error::IndivisibleShape { .. })));
        assert_eq!(bd(&M::identity(1), 3), M::identity(3));
    }

    #[test]
    fn leaf_basis_is_orthonormal() {
        for (alpha, k, mu) in [(1, 1, (1, 1)), (2, 2, (1, 2)), (1, 3, (2, 1))] {
            let b = leaf_basis(alpha, k, mu).unwrap();
            assert_eq!(b.elements.len(), alpha * mu.0 * alpha * mu.1 * k * k);
            for (x, ex) in b.elements.iter().enumerate() {
                for (y, ey) in b.elements.iter().enumerate() {
                    let ip = frobenius_ip(&ex.matrix, &ey.matrix).unwrap();
                    let want = if x == y { 1.0 } else { 0.0 };
                    assert!((ip - Complex::new(want, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn unit_leaf_basis_is_elementary() {
        let b = leaf_basis(1, 1, (1, 2)).unwrap();
        assert!(b.elements.iter().all(|e| e.kind == BasisKind::Scalar));
        assert_eq!(b.elements[1].matrix.get(0, 1), &Complex::new(1.0, 0.0));
    }
}
