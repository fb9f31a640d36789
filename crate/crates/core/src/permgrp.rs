//! Permutations of `{1..k}` and the semi-tensor product between symmetric
//! groups of different orders.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::scalar::{Field, Rational};
use crate::kernel::stp::stp_left;
use crate::kernel::Mat;

/// A bijection of `{1..k}`, stored as its images `σ(1), …, σ(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let k = images.len();
        if k == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; k];
        for &x in &images {
            if x == 0 || x > k {
                return Err(Error::InvalidPermutation(format!("image {x} outside 1..={k}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Perm { images })
    }

    /// From zero-based images.
    pub fn from_zero_based(images: &[usize]) -> Result<Perm> {
        Perm::new(images.iter().map(|x| x + 1).collect())
    }

    pub fn identity(k: usize) -> Perm {
        Perm {
            images: (1..=k).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for `i` in `1..=k`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other` for permutations of equal order.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.order() != other.order() {
            return Err(Error::InvalidPermutation(format!(
                "orders {} and {} differ",
                self.order(),
                other.order()
            )));
        }
        Ok(Perm {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.order()];
        for (j, &i) in self.images.iter().enumerate() {
            inv[i - 1] = j + 1;
        }
        Perm { images: inv }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `m_ij = 1` iff `σ(j) = i`, so that `M_σ M_λ = M_{σ∘λ}`.
pub fn perm_to_matrix<T: Field>(s: &Perm) -> Mat<T> {
    Mat::logical(s.order(), s.images())
}

pub fn matrix_to_perm<T: Field>(m: &Mat<T>, tol: f64) -> Result<Perm> {
    if !m.is_square() {
        return Err(Error::NotPermutationMatrix);
    }
    let n = m.rows();
    let (zero, one) = (T::zero(), T::one());
    let mut images = Vec::with_capacity(n);
    for j in 0..n {
        let mut hit = None;
        for i in 0..n {
            let x = m.get(i, j);
            if x.near(&one, tol) {
                if hit.is_some() {
                    return Err(Error::NotPermutationMatrix);
                }
                hit = Some(i + 1);
            } else if !x.near(&zero, tol) {
                return Err(Error::NotPermutationMatrix);
            }
        }
        images.push(hit.ok_or(Error::NotPermutationMatrix)?);
    }
    Perm::new(images).map_err(|_| Error::NotPermutationMatrix)
}

/// `σ ⋉ λ ∈ S_{lcm(k, l)}`, read back from `M_σ ⋉ M_λ`.
pub fn perm_stp(s: &Perm, l: &Perm) -> Perm {
    let prod = stp_left(&perm_to_matrix::<Rational>(s), &perm_to_matrix::<Rational>(l));
    matrix_to_perm(&prod, 0.0).expect("the product of permutation matrices is a permutation matrix")
}
