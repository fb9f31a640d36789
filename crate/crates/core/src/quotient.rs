//! Arithmetic and geometry on the quotient spaces of equal-ratio classes:
//! addition, weighted inner product, projection onto a truncated leaf, the
//! modified determinant and trace, class functions and polynomials.

use num_integer::Integer;

use crate::equivalence::{embed, pr, root_of, MatClass, Shape, Side};
use crate::error::{Error, Result};
use crate::kernel::funcs::{apply, MatFn};
use crate::kernel::linalg::{det, express_in};
use crate::kernel::products::frobenius_ip;
use crate::kernel::scalar::{Complex, Field, Rational, DEFAULT_TOL};
use crate::kernel::stp::{sta_left, sta_right};
use crate::kernel::Mat;
use crate::poly::Poly;

fn same_mu<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<()> {
    if a.mu() != b.mu() {
        return Err(Error::MuMismatch {
            left: a.mu(),
            right: b.mu(),
        });
    }
    Ok(())
}

fn check_ratio(a: (usize, usize), b: (usize, usize)) -> Result<()> {
    if a != b {
        return Err(Error::MuMismatch { left: a, right: b });
    }
    Ok(())
}

/// The class of a concrete matrix under the given equivalence.
pub fn class_of<T: Field>(a: &Mat<T>, side: Side) -> MatClass<T> {
    root_of(a, side)
}

pub fn class_add<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<MatClass<T>> {
    same_mu(a, b)?;
    let sum = match a.side() {
        Side::Left => sta_left(a.root(), b.root())?,
        Side::Right => sta_right(a.root(), b.root())?,
    };
    Ok(root_of(&sum, a.side()))
}

pub fn class_scale<T: Field>(c: &T, a: &MatClass<T>) -> MatClass<T> {
    root_of(&a.root().scale(c), a.side())
}

pub fn class_neg<T: Field>(a: &MatClass<T>) -> MatClass<T> {
    class_scale(&-T::one(), a)
}

pub fn class_sub<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<MatClass<T>> {
    class_add(a, &class_neg(b))
}

/// `(1/t)·(a ⊗ I_{t/α} | b ⊗ I_{t/β})_F` with `α`, `β` the leaves and
/// `t = lcm(α, β)`.
pub fn weighted_ip<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<T> {
    weighted_ip_side(a, b, Side::Left)
}

pub fn weighted_ip_side<T: Field>(a: &Mat<T>, b: &Mat<T>, side: Side) -> Result<T> {
    let (sa, sb) = (Shape::of(a), Shape::of(b));
    check_ratio(sa.mu(), sb.mu())?;
    let t = sa.leaf.lcm(&sb.leaf);
    let ip = frobenius_ip(&embed(a, t / sa.leaf, side), &embed(b, t / sb.leaf, side))?;
    Ok(ip * T::from_ratio(1, t as i64))
}

pub fn class_ip<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<T> {
    same_mu(a, b)?;
    weighted_ip_side(a.root(), b.root(), a.side())
}

pub fn norm<T: Field>(a: &Mat<T>) -> f64 {
    weighted_ip(a, a)
        .expect("same ratio")
        .to_complex()
        .re
        .max(0.0)
        .sqrt()
}

pub fn class_norm<T: Field>(a: &MatClass<T>) -> f64 {
    class_ip(a, a).expect("same ratio").to_complex().re.max(0.0).sqrt()
}

/// Distance between two matrices of equal ratio: the norm of their STA
/// difference.
pub fn dist<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<f64> {
    let diff = sta_left(a, &b.neg())?;
    Ok(norm(&diff))
}

pub fn class_dist<T: Field>(a: &MatClass<T>, b: &MatClass<T>) -> Result<f64> {
    Ok(class_norm(&class_sub(a, b)?))
}

/// Best approximation of `⟨a⟩` at leaf `alpha` in the weighted norm:
/// embed `a` into the common leaf `t = lcm(alpha, β)` and average the
/// diagonals of its `t/alpha`-blocks.
pub fn project_to_truncation<T: Field>(a: &Mat<T>, alpha: usize) -> Result<Mat<T>> {
    if alpha == 0 {
        return Err(Error::InvalidArgument("alpha must be positive".into()));
    }
    let beta = Shape::of(a).leaf;
    let t = alpha.lcm(&beta);
    pr(&a.kron_identity(t / beta), t / alpha)
}

/// Projection `P` at leaf `alpha` together with the residual
/// `E = a ⊗ I_{t/β} − P ⊗ I_{t/α}` at the common leaf `t`.
pub fn truncation_residual<T: Field>(a: &Mat<T>, alpha: usize) -> Result<(Mat<T>, Mat<T>)> {
    let p = project_to_truncation(a, alpha)?;
    let beta = Shape::of(a).leaf;
    let t = alpha.lcm(&beta);
    let e = a.kron_identity(t / beta).sub(&p.kron_identity(t / alpha))?;
    Ok((p, e))
}

pub fn project_class<T: Field>(a: &MatClass<T>, alpha: usize) -> Result<MatClass<T>> {
    Ok(root_of(&project_to_truncation(a.root(), alpha)?, a.side()))
}

/// Principal complex `n`-th root of `det(a)`.
pub fn dt<T: Field>(a: &Mat<T>) -> Result<Complex> {
    let d = det(a)?.to_complex();
    if d == Complex::new(0.0, 0.0) {
        return Ok(d);
    }
    let n = a.rows() as f64;
    let r = d.norm().powf(1.0 / n);
    let theta = d.arg() / n;
    // snap the parts that cos/sin leave at rounding level
    let (s, c) = theta.sin_cos();
    let clean = |x: f64| if x.abs() < 1e-15 { 0.0 } else { x };
    Ok(Complex::new(r * clean(c), r * clean(s)))
}

/// `tr(a)/n`.
pub fn tr_mod<T: Field>(a: &Mat<T>) -> Result<T> {
    let tr = a.trace()?;
    Ok(tr * T::from_ratio(1, a.rows() as i64))
}

fn square_root<T: Field>(a: &MatClass<T>) -> Result<&Mat<T>> {
    if !a.is_square() {
        return Err(Error::NotSquareClass);
    }
    Ok(a.root())
}

pub fn class_dt<T: Field>(a: &MatClass<T>) -> Result<Complex> {
    dt(square_root(a)?)
}

pub fn class_tr_mod<T: Field>(a: &MatClass<T>) -> Result<T> {
    tr_mod(square_root(a)?)
}

/// Membership in the bundled general linear group: `Dt ≠ 0`.
pub fn in_gl<T: Field>(a: &MatClass<T>, tol: f64) -> Result<bool> {
    Ok(!det(square_root(a)?)?.near_zero(tol))
}

/// Membership in the bundled special linear group: `det = 1` on the root.
pub fn in_sl_group<T: Field>(a: &MatClass<T>, tol: f64) -> Result<bool> {
    Ok(det(square_root(a)?)?.near(&T::one(), tol))
}

pub fn class_fn<T: Field>(f: MatFn, a: &MatClass<T>) -> Result<MatClass<Complex>> {
    let value = apply(f, square_root(a)?)?;
    Ok(root_of(&value, a.side()))
}

/// `det(λI − a)` by Faddeev–LeVerrier, exact.
pub fn char_poly_matrix(a: &Mat<Rational>) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = Mat::<Rational>::zeros(n, n);
    for k in 1..=n {
        m = a
            .matmul(&m)?
            .add(&Mat::identity(n).scale(&coeffs[n - k + 1]))?;
        let am = a.matmul(&m)?;
        coeffs[n - k] = -am.trace()? / Rational::from_i64(k as i64);
    }
    Ok(Poly::new(coeffs))
}

/// Minimal polynomial of a square matrix from the first linear dependency
/// among `vec(I), vec(a), vec(a²), …`.
pub fn min_poly_matrix(a: &Mat<Rational>) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let vec_of = |m: &Mat<Rational>| Mat::column_vector(m.data().to_vec()).expect("nonempty");
    let mut power = Mat::identity(n);
    let mut basis = Vec::new();
    loop {
        let v = vec_of(&power);
        if let Some(c) = express_in(&basis, &v, 0.0) {
            let k = basis.len();
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Ok(Poly::new(coeffs));
        }
        basis.push(v);
        power = power.matmul(a)?;
    }
}

fn rational_root(a: &MatClass<Rational>) -> Result<&Mat<Rational>> {
    if !a.is_square() {
        let r = a.root();
        return Err(Error::NotSquare {
            rows: r.rows(),
            cols: r.cols(),
        });
    }
    Ok(a.root())
}

/// Characteristic polynomial of a square class, taken on its root.
pub fn char_poly(a: &MatClass<Rational>) -> Result<Poly> {
    char_poly_matrix(rational_root(a)?)
}

/// Characteristic polynomial of the member `root ⊗ I_k`.
pub fn leaf_char_poly(a: &MatClass<Rational>, k: usize) -> Result<Poly> {
    char_poly_matrix(&a.representative(k))
}

pub fn min_poly(a: &MatClass<Rational>) -> Result<Poly> {
    min_poly_matrix(rational_root(a)?)
}

/// `p(⟨a⟩)` evaluated with class addition and semi-tensor powers; the
/// constant term contributes `c₀·⟨1⟩`.
pub fn poly_eval_class(p: &Poly, a: &MatClass<Rational>) -> Result<MatClass<Rational>> {
    let root = rational_root(a)?;
    let one = Mat::<Rational>::identity(1);
    let mut acc = root_of(&Mat::zeros(1, 1), a.side());
    let mut power = Mat::identity(root.rows());
    for (k, c) in p.coeffs().iter().enumerate() {
        if k > 0 {
            power = power.matmul(root)?;
        }
        let term = if k == 0 { one.scale(c) } else { power.scale(c) };
        acc = class_add(&acc, &root_of(&term, a.side()))?;
    }
    Ok(acc)
}

fn superior(mu: (usize, usize), delta: (usize, usize)) -> Result<()> {
    if mu.0 % delta.0 != 0 || mu.1 % delta.1 != 0 {
        return Err(Error::NotSuperior { mu, delta });
    }
    Ok(())
}

/// Block matrix of weighted inner products between the ratio-`delta`
/// blocks of `a` and `b`. Each operand is split into blocks of shape
/// `leaf·delta`; entry `(i·ζ + k, j·ℓ + l)` is `(A_ij | B_kl)_W`, where
/// `b` has a `ζ×ℓ` block grid.
pub fn delta_ip<T: Field>(a: &Mat<T>, b: &Mat<T>, delta: (usize, usize)) -> Result<Mat<T>> {
    if delta.0 == 0 || delta.1 == 0 || delta.0.gcd(&delta.1) != 1 {
        return Err(Error::InvalidArgument(format!(
            "ratio {delta:?} must be positive and reduced"
        )));
    }
    let (sa, sb) = (Shape::of(a), Shape::of(b));
    superior(sa.mu(), delta)?;
    superior(sb.mu(), delta)?;
    let (ah, aw) = (sa.leaf * delta.0, sa.leaf * delta.1);
    let (bh, bw) = (sb.leaf * delta.0, sb.leaf * delta.1);
    let (xi, eta) = (sa.rows / ah, sa.cols / aw);
    let (zeta, ell) = (sb.rows / bh, sb.cols / bw);
    let t = sa.leaf.lcm(&sb.leaf);
    let (ka, kb) = (t / sa.leaf, t / sb.leaf);
    let scale = T::from_ratio(1, t as i64);
    let mut out = Mat::zeros(xi * zeta, eta * ell);
    for i in 0..xi {
        for j in 0..eta {
            let ablk = a.block(i * ah, j * aw, ah, aw).kron_identity(ka);
            for k in 0..zeta {
                for l in 0..ell {
                    let bblk = b.block(k * bh, l * bw, bh, bw).kron_identity(kb);
                    let ip = frobenius_ip(&ablk, &bblk)? * scale.clone();
                    out.set(i * zeta + k, j * ell + l, ip);
                }
            }
        }
    }
    Ok(out)
}

/// Weighted inner products of the blocks of `a` and `b` at the common ratio
/// `(gcd(μ_y, λ_y), gcd(μ_x, λ_x))`.
pub fn gen_weighted_ip<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Result<Mat<T>> {
    let (sa, sb) = (Shape::of(a), Shape::of(b));
    let delta = (sa.mu_y.gcd(&sb.mu_y), sa.mu_x.gcd(&sb.mu_x));
    delta_ip(a, b, delta)
}

/// `true` when `⟨a⟩` is the zero class.
pub fn is_zero_class<T: Field>(a: &MatClass<T>) -> bool {
    a.root().near_zero(DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{q, qr};

    type M = Mat<Rational>;

    fn cls(rows: &[&[i64]]) -> MatClass<Rational> {
        class_of(&M::from_i64_rows(rows), Side::Left)
    }

    #[test]
    fn addition_reduces_to_root() {
        let s = class_add(&cls(&[&[2]]), &cls(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.root(), &M::from_i64_rows(&[&[3]]));
        let a = cls(&[&[1, 2], &[3, 4]]);
        let z = class_add(&a, &class_neg(&a)).unwrap();
        assert_eq!(z.root(), &M::zeros(1, 1));
        assert!(matches!(
            class_add(&a, &cls(&[&[1, 2]])),
            Err(Error::MuMismatch { .. })
        ));
    }

    #[test]
    fn weighted_ip_is_leaf_independent() {
        let a = M::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(weighted_ip(&M::identity(3), &M::identity(3)).unwrap(), q(1));
        assert_eq!(
            weighted_ip(&a, &a.kron_identity(3)).unwrap(),
            weighted_ip(&a, &a).unwrap()
        );
        assert_eq!(weighted_ip(&a, &M::identity(1)).unwrap(), qr(5, 2));
    }

    #[test]
    fn norm_and_distance() {
        assert_eq!(class_norm(&cls(&[&[1]])), 1.0);
        let a = cls(&[&[1, 2], &[3, 4]]);
        assert_eq!(class_dist(&a, &a).unwrap(), 0.0);
        assert!((dist(&M::identity(2), &M::from_i64_rows(&[&[2]])).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn projection_of_embedded_matrix_is_identity() {
        let c = M::from_i64_rows(&[&[1, 0, -2, 5]]);
        assert_eq!(project_to_truncation(&c.kron_identity(3), 1).unwrap(), c);
    }

    #[test]
    fn modified_determinant_and_trace() {
        assert_eq!(tr_mod(&M::identity(4)).unwrap(), q(1));
        assert!((dt(&M::identity(4)).unwrap() - Complex::new(1.0, 0.0)).norm() < 1e-15);
        let a = M::from_i64_rows(&[&[2, 1], &[1, 3]]);
        let d1 = dt(&a).unwrap();
        let d3 = dt(&a.kron_identity(3)).unwrap();
        assert!((d1 - d3).norm() < 1e-12);
        assert!((d1.re - 5f64.sqrt()).abs() < 1e-12);
        assert!(in_gl(&cls(&[&[2, 1], &[1, 3]]), DEFAULT_TOL).unwrap());
        assert!(!in_sl_group(&cls(&[&[2, 1], &[1, 3]]), DEFAULT_TOL).unwrap());
        assert!(in_sl_group(&cls(&[&[2, 1], &[1, 1]]), DEFAULT_TOL).unwrap());
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(char_poly(&cls(&[&[0, 1], &[0, 0]])).unwrap(), Poly::monomial(2));
        assert_eq!(char_poly(&cls(&[&[1]])).unwrap(), Poly::from_i64(&[-1, 1]));
        let a = cls(&[&[1, 2], &[3, 4]]);
        let p = char_poly(&a).unwrap();
        assert_eq!(p, Poly::from_i64(&[-2, -5, 1]));
        assert_eq!(leaf_char_poly(&a, 3).unwrap(), p.pow(3));
        assert!(poly_eval_class(&p, &a).unwrap().root().is_zero());
    }

    #[test]
    fn minimal_polynomial() {
        let a = M::from_i64_rows(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(min_poly_matrix(&a).unwrap(), Poly::from_i64(&[6, -5, 1]));
        assert_eq!(min_poly_matrix(&M::zeros(2, 2)).unwrap(), Poly::monomial(1));
    }

    #[test]
    fn delta_ip_degenerates_to_weighted_ip() {
        let a = M::from_i64_rows(&[&[1, 2, 0, 1], &[0, 1, 1, 1]]);
        let b = M::from_i64_rows(&[&[1, 1]]);
        let d = delta_ip(&a, &b, (1, 2)).unwrap();
        assert_eq!(d, M::new(1, 1, vec![weighted_ip(&a, &b).unwrap()]).unwrap());
        assert!(delta_ip(&a, &M::zeros(1, 2), (1, 2)).unwrap().is_zero());
        assert!(matches!(delta_ip(&a, &b, (1, 3)), Err(Error::NotSuperior { .. })));
    }

    #[test]
    fn generalized_weighted_blocks() {
        // ratios 1/2 and 1/3 share the block ratio 1/1
        let a = M::from_i64_rows(&[&[1, 2]]);
        let b = M::from_i64_rows(&[&[3, 4, 5]]);
        let g = gen_weighted_ip(&a, &b).unwrap();
        assert_eq!(g, M::from_i64_rows(&[&[3, 4, 5, 6, 8, 10]]));
    }
}
