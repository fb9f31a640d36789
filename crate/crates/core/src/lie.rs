//! The Lie algebra of square classes: bracket, adjoint matrices, Killing
//! form, nilpotency and the classical sub-algebra predicates.

use num_integer::Integer;

use crate::equivalence::{root_of, MatClass, Side};
use crate::error::{Error, Result};
use crate::kernel::predicates::predicates;
use crate::kernel::scalar::{Field, Rational};
use crate::kernel::stp::{sta_left, stp_left, stp_right};
use crate::kernel::Mat;
use crate::quotient::class_tr_mod;

/// `[[0, 1], [−1, 0]]`.
pub fn symplectic_j<T: Field>() -> Mat<T> {
    Mat::from_fn(2, 2, |i, j| match (i, j) {
        (0, 1) => T::one(),
        (1, 0) => -T::one(),
        _ => T::zero(),
    })
}

fn require_square<T: Field>(a: &MatClass<T>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquareClass);
    }
    Ok(())
}

/// `⟨A⋉B − B⋉A⟩`.
pub fn bracket<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<MatClass<T>> {
    require_square(a)?;
    require_square(b)?;
    let prod = match a.side() {
        Side::Left => stp_left,
        Side::Right => stp_right,
    };
    let ab = prod(a.root(), b.root());
    let ba = prod(b.root(), a.root());
    Ok(root_of(&ab.sub(&ba)?, a.side()))
}

/// Column-stacking vectorisation.
pub fn vec_columns<T: Field>(a: &Mat<T>) -> Mat<T> {
    let (m, n) = a.shape();
    Mat::from_fn(m * n, 1, |k, _| a.get(k % m, k / m).clone())
}

/// Inverse of [`vec_columns`] for a `t×t` result.
pub fn unvec_square<T: Field>(v: &Mat<T>, t: usize) -> Mat<T> {
    Mat::from_fn(t, t, |i, j| v.get(j * t + i, 0).clone())
}

/// Matrix of `B ↦ A_t B − B A_t` on `vec(B)`, where `A_t` is the member of
/// `a` of size `t`: `I_t ⊗ A_t − A_tᵀ ⊗ I_t`.
pub fn ad_matrix<T: Field>(a: &MatClass<T>, t: usize) -> Result<Mat<T>> {
    require_square(a)?;
    let leaf = a.leaf();
    if t == 0 || t % leaf != 0 {
        return Err(Error::LeafNotDivisible { leaf, t });
    }
    let at = a.representative(t / leaf);
    let left = at.identity_kron(t);
    let right = at.transpose().kron_identity(t);
    left.sub(&right)
}

/// Killing form evaluated on the leaf `t`, normalised by `t²`.
pub fn killing_form_at<T: Field>(a: &MatClass<T>, b: &MatClass<T>, t: usize) -> Result<T> {
    let prod = ad_matrix(a, t)?.matmul(&ad_matrix(b, t)?)?;
    Ok(prod.trace()? * T::from_ratio(1, (t * t) as i64))
}

/// Killing form on the smallest common leaf of the two roots.
pub fn killing_form<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<T> {
    require_square(a)?;
    require_square(b)?;
    killing_form_at(a, b, a.leaf().lcm(&b.leaf()))
}

/// Smallest `k ≥ 1` with `a^k = 0`, if any.
pub fn nilpotency_index(a: &Mat<Rational>) -> Option<usize> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut p = a.clone();
    for k in 1..=n {
        if p.is_zero() {
            return Some(k);
        }
        p = p.matmul(a).expect("square");
    }
    None
}

pub fn is_nilpotent_class(a: &MatClass<Rational>) -> Result<bool> {
    require_square(a)?;
    Ok(nilpotency_index(a.root()).is_some())
}

/// Nilpotency index of `ad` on the root's leaf.
pub fn ad_nilpotency_index(a: &MatClass<Rational>) -> Result<Option<usize>> {
    Ok(nilpotency_index(&ad_matrix(a, a.leaf())?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubalgebraFlags {
    /// Skew-symmetric root.
    pub in_o: bool,
    /// Zero modified trace.
    pub in_sl: bool,
    /// Upper triangular root.
    pub in_t: bool,
    /// Strictly upper triangular root.
    pub in_n: bool,
    /// Diagonal root.
    pub in_d: bool,
    /// `⟨J⟩⋉⟨A⟩ ⊞ ⟨A⟩ᵀ⋉⟨J⟩ = ⟨0⟩`.
    pub in_sp: bool,
}

pub fn subalgebra_membership<T: Field>(a: &MatClass<T>, tol: f64) -> Result<SubalgebraFlags> {
    require_square(a)?;
    let root = a.root();
    let f = predicates(root, tol);
    let j = symplectic_j::<T>();
    let lhs = stp_left(&j, root);
    let rhs = stp_left(&root.transpose(), &j);
    Ok(SubalgebraFlags {
        in_o: f.is_skew,
        in_sl: class_tr_mod(a)?.near_zero(tol),
        in_t: f.is_upper_triangular,
        in_n: f.is_strictly_upper_triangular,
        in_d: f.is_diagonal,
        in_sp: sta_left(&lhs, &rhs)?.near_zero(tol),
    })
}
