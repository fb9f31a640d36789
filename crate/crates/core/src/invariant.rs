//! Invariant strata of the vector product, realizations on them, spectra of
//! non-square matrices, A-sequences and minimal annihilators.

use num_integer::Integer;

use crate::equivalence::Shape;
use crate::error::{Error, Result};
use crate::kernel::eigen::{eigenvalues, sort_complex};
use crate::kernel::linalg::{express_in, nullspace, rank};
use crate::kernel::scalar::{Complex, Field, Rational, Scalar};
use crate::kernel::Mat;
use crate::poly::Poly;
use crate::quotient::char_poly_matrix;
use crate::vectors::vprod;

/// `μ_y = 1`.
pub fn is_bounded(shape: Shape) -> bool {
    shape.mu_y == 1
}

/// Whether `𝒱_t` is mapped into itself: `μ_y = 1` and
/// `lcm(leaf·μ_x, t) = t·μ_x`.
pub fn is_invariant_dim(shape: Shape, t: usize) -> bool {
    t > 0 && is_bounded(shape) && shape.cols.lcm(&t) == t * shape.mu_x
}

pub fn invariant_dims_up_to(shape: Shape, tmax: usize) -> Vec<usize> {
    (1..=tmax).filter(|&t| is_invariant_dim(shape, t)).collect()
}

fn require_invariant<T: Field>(a: &Mat<T>, t: usize) -> Result<()> {
    if !is_invariant_dim(Shape::of(a), t) {
        return Err(Error::NotInvariantDim {
            rows: a.rows(),
            cols: a.cols(),
            t,
        });
    }
    Ok(())
}

/// The `t×t` matrix whose `i`-th column is `a ⋉⃗ δ_t^i`.
pub fn realization<T: Field>(a: &Mat<T>, t: usize) -> Result<Mat<T>> {
    require_invariant(a, t)?;
    Ok(crate::vectors::vprod_mat(a, &Mat::identity(t)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorKind {
    /// `(R − λI)v = 0`.
    Proper,
    /// In the kernel of `(R − λI)^m` but not of `R − λI`; `m` is the
    /// algebraic multiplicity.
    Generalized,
}

#[derive(Debug, Clone)]
pub struct EigenVector {
    pub value: Complex,
    pub vector: Mat<Complex>,
    pub kind: VectorKind,
    /// `‖a ⋉⃗ v − λv‖ / ‖v‖`, measured with the vector product directly.
    /// Only meaningful for proper vectors.
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct SpectrumResult {
    pub t: usize,
    pub realization: Mat<Complex>,
    /// With multiplicity, sorted by real then imaginary part.
    pub eigenvalues: Vec<Complex>,
    pub eigenvectors: Vec<EigenVector>,
}

impl SpectrumResult {
    pub fn proper(&self) -> impl Iterator<Item = &EigenVector> {
        self.eigenvectors.iter().filter(|e| e.kind == VectorKind::Proper)
    }
}

fn clean(z: Complex) -> Complex {
    let scale = z.norm().max(1.0);
    let fix = |x: f64| if x.abs() <= 1e-13 * scale { 0.0 } else { x };
    Complex::new(fix(z.re), fix(z.im))
}

fn as_rational<T: Field>(a: &Mat<T>) -> Option<Mat<Rational>> {
    let data: Option<Vec<Rational>> = a
        .data()
        .iter()
        .map(|x| match x.clone().into_scalar() {
            Scalar::Rational(q) => Some(q),
            Scalar::Complex(_) => None,
        })
        .collect();
    data.map(|d| Mat::new(a.rows(), a.cols(), d).expect("same shape"))
}

struct Eigenvalue {
    value: Complex,
    exact: Option<Rational>,
    multiplicity: usize,
}

fn distinct_eigenvalues(r: &Mat<Complex>, exact: Option<&Mat<Rational>>) -> Result<Vec<Eigenvalue>> {
    if let Some(rq) = exact {
        let roots = char_poly_matrix(rq)?.roots()?;
        return Ok(roots
            .into_iter()
            .map(|root| Eigenvalue {
                value: clean(root.value),
                exact: root.exact,
                multiplicity: root.multiplicity,
            })
            .collect());
    }
    let mut values = eigenvalues(r)?;
    sort_complex(&mut values);
    let scale = r.max_abs().max(1.0);
    let mut out: Vec<Eigenvalue> = Vec::new();
    for z in values {
        let z = clean(z);
        match out.iter_mut().find(|e| (e.value - z).norm() <= 1e-6 * scale) {
            Some(e) => e.multiplicity += 1,
            None => out.push(Eigenvalue {
                value: z,
                exact: None,
                multiplicity: 1,
            }),
        }
    }
    Ok(out)
}

fn shifted<T: Field>(r: &Mat<T>, lambda: &T) -> Mat<T> {
    r.sub(&Mat::identity(r.rows()).scale(lambda)).expect("square")
}

/// Proper and generalized eigenvectors for one eigenvalue.
fn vectors_for(
    r: &Mat<Complex>,
    exact_r: Option<&Mat<Rational>>,
    ev: &Eigenvalue,
) -> Result<Vec<(Mat<Complex>, VectorKind)>> {
    let num_tol = 1e-8 * r.max_abs().max(1.0);
    let (proper, general): (Vec<Mat<Complex>>, Vec<Mat<Complex>>) = match (exact_r, &ev.exact) {
        (Some(rq), Some(lq)) => {
            let s = shifted(rq, lq);
            let p = nullspace(&s, 0.0);
            let g = if p.len() < ev.multiplicity {
                nullspace(&s.pow(ev.multiplicity)?, 0.0)
            } else {
                Vec::new()
            };
            (
                p.iter().map(Mat::to_complex).collect(),
                g.iter().map(Mat::to_complex).collect(),
            )
        }
        _ => {
            let s = shifted(r, &ev.value);
            let p = nullspace(&s, num_tol);
            let g = if p.len() < ev.multiplicity {
                nullspace(&s.pow(ev.multiplicity)?, num_tol)
            } else {
                Vec::new()
            };
            (p, g)
        }
    };
    let mut out: Vec<(Mat<Complex>, VectorKind)> =
        proper.iter().map(|v| (v.clone(), VectorKind::Proper)).collect();
    let mut span: Vec<Mat<Complex>> = proper;
    for g in general {
        let mut trial = span.clone();
        trial.push(g.clone());
        let stacked = Mat::from_fn(r.rows(), trial.len(), |i, j| *trial[j].get(i, 0));
        if rank(&stacked, num_tol) == trial.len() {
            span = trial;
            out.push((g, VectorKind::Generalized));
        }
    }
    Ok(out)
}

fn unit(v: Mat<Complex>) -> Mat<Complex> {
    let n = v.norm_fro();
    if n == 0.0 {
        v
    } else {
        v.scale(&Complex::new(1.0 / n, 0.0))
    }
}

/// Eigenvalues and eigenvectors of the realization of `a` on `𝒱_t`.
///
/// Rational input goes through the exact characteristic polynomial: its
/// square-free factors give exact multiplicities and exact rational
/// eigenvalues, and only the remaining irreducible factors are solved in
/// floating point. Complex input uses the QR eigensolver directly.
pub fn spectrum<T: Field>(a: &Mat<T>, t: usize) -> Result<SpectrumResult> {
    let r = realization(a, t)?;
    let exact = as_rational(&r);
    let rc = r.to_complex();
    let ac = a.to_complex();
    let distinct = distinct_eigenvalues(&rc, exact.as_ref())?;
    let mut values = Vec::with_capacity(t);
    let mut vectors = Vec::new();
    for ev in &distinct {
        values.extend(std::iter::repeat_n(ev.value, ev.multiplicity));
        for (v, kind) in vectors_for(&rc, exact.as_ref(), ev)? {
            let v = unit(v);
            let lhs = vprod(&ac, &v)?;
            let residual = lhs.sub(&v.scale(&ev.value))?.norm_fro();
            vectors.push(EigenVector {
                value: ev.value,
                vector: v,
                kind,
                residual,
            });
        }
    }
    sort_complex(&mut values);
    vectors.sort_by(|x, y| {
        x.value
            .re
            .total_cmp(&y.value.re)
            .then(x.value.im.total_cmp(&y.value.im))
    });
    Ok(SpectrumResult {
        t,
        realization: rc,
        eigenvalues: values,
        eigenvectors: vectors,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceStatus {
    /// `X_k` is the first iterate lying in the invariant stratum `𝒱_t`.
    Entered { t: usize, k: usize },
    /// Unbounded operator: no invariant stratum exists, and the dimensions
    /// were followed until the step limit or until they overflowed.
    Diverging,
    /// Bounded operator that had not yet entered an invariant stratum when
    /// the step limit was reached.
    StepLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASequence {
    /// `dim X_0, dim X_1, …` up to the terminal step.
    pub dims: Vec<usize>,
    pub status: SequenceStatus,
}

/// `dim(A ⋉⃗ X) = m·lcm(n, p)/n`, or `None` on overflow.
pub fn next_dim(shape: Shape, p: usize) -> Option<usize> {
    let n = shape.cols;
    let g = n.gcd(&p);
    (p / g).checked_mul(shape.rows)
}

/// Dimension dynamics of the A-sequence starting from a vector of size `p`.
pub fn dim_sequence(shape: Shape, p: usize, max_steps: usize) -> ASequence {
    let mut dims = vec![p];
    let mut cur = p;
    for k in 0..=max_steps {
        if is_invariant_dim(shape, cur) {
            return ASequence {
                dims,
                status: SequenceStatus::Entered { t: cur, k },
            };
        }
        if k == max_steps {
            break;
        }
        match next_dim(shape, cur) {
            Some(next) => {
                cur = next;
                dims.push(cur);
            }
            None => break,
        }
    }
    let status = if is_bounded(shape) {
        SequenceStatus::StepLimit
    } else {
        SequenceStatus::Diverging
    };
    ASequence { dims, status }
}

pub fn a_sequence_dims<T: Field>(a: &Mat<T>, x0: &Mat<T>, max_steps: usize) -> Result<ASequence> {
    if !x0.is_column() {
        return Err(Error::NotColumn { cols: x0.cols() });
    }
    Ok(dim_sequence(Shape::of(a), x0.rows(), max_steps))
}

/// `X_0, X_1 = a ⋉⃗ X_0, …, X_steps`.
pub fn a_sequence<T: Field>(a: &Mat<T>, x0: &Mat<T>, steps: usize) -> Result<Vec<Mat<T>>> {
    let mut out = vec![x0.clone()];
    for _ in 0..steps {
        let next = vprod(a, out.last().expect("nonempty"))?;
        out.push(next);
    }
    Ok(out)
}

/// `Σ c_j X_j` with every term stretched by `⊗ 1` to the lcm of the
/// dimensions involved; the constant term is `c_0·X_0`.
pub fn annihilator_apply(p: &Poly, a: &Mat<Rational>, x0: &Mat<Rational>) -> Result<Mat<Rational>> {
    let deg = p.degree().unwrap_or(0);
    let seq = a_sequence(a, x0, deg)?;
    embedded_combination(&seq, p.coeffs())
}

fn embedded_combination(seq: &[Mat<Rational>], coeffs: &[Rational]) -> Result<Mat<Rational>> {
    let l = seq
        .iter()
        .take(coeffs.len().max(1))
        .fold(1usize, |acc, x| acc.lcm(&x.rows()));
    let mut acc = Mat::<Rational>::zeros(l, 1);
    for (x, c) in seq.iter().zip(coeffs) {
        acc = acc.add(&x.kron_ones(l / x.rows()).scale(c))?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Annihilator {
    /// `x^k·q(x)`.
    pub poly: Poly,
    /// Steps `k` before the sequence entered its invariant stratum.
    pub entry_step: usize,
    /// Dimension of that stratum.
    pub invariant_dim: usize,
    /// Minimal `q` with `q(A|_s)·X_k = 0` on the realization.
    pub cofactor: Poly,
    /// Whether `q` divides the characteristic polynomial of the realization.
    pub cofactor_divides_char_poly: bool,
    /// A monic relation of smaller degree than `poly` that already vanishes
    /// under the stretched-sum evaluation, when one exists. Reported only.
    pub lower_degree_relation: Option<Poly>,
}

/// Minimal annihilator of `x0`: follow the A-sequence to its invariant
/// stratum `𝒱_s` at step `k`, find the minimal `q` for `X_k` under the
/// realization by exact Krylov elimination, and return `x^k·q(x)`.
pub fn min_annihilator(a: &Mat<Rational>, x0: &Mat<Rational>, max_steps: usize) -> Result<Annihilator> {
    let shape = Shape::of(a);
    if !is_bounded(shape) {
        return Err(Error::Unbounded { mu_y: shape.mu_y });
    }
    let seq = a_sequence_dims(a, x0, max_steps)?;
    let SequenceStatus::Entered { t: s, k } = seq.status else {
        return Err(Error::NoConvergence);
    };
    let xs = a_sequence(a, x0, k)?;
    let y0 = xs.last().expect("nonempty").clone();
    let r = realization(a, s)?;

    let mut krylov = vec![];
    let mut y = y0;
    let cofactor = loop {
        if let Some(c) = express_in(&krylov, &y, 0.0) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            break Poly::new(coeffs);
        }
        let next = r.matmul(&y)?;
        krylov.push(y);
        y = next;
    };
    let poly = Poly::monomial(k).mul(&cofactor);
    let char_poly = char_poly_matrix(&r)?;
    let cofactor_divides_char_poly = char_poly.div_rem(&cofactor).1.is_zero();

    let deg = poly.degree().expect("monic");
    let full = a_sequence(a, x0, deg)?;
    let mut lower = None;
    for d in 1..deg {
        let l = full[..=d].iter().fold(1usize, |acc, x| acc.lcm(&x.rows()));
        let basis: Vec<Mat<Rational>> = full[..d].iter().map(|x| x.kron_ones(l / x.rows())).collect();
        let target = full[d].kron_ones(l / full[d].rows());
        if let Some(c) = express_in(&basis, &target, 0.0) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::one());
            lower = Some(Poly::new(coeffs));
            break;
        }
    }

    Ok(Annihilator {
        poly,
        entry_step: k,
        invariant_dim: s,
        cofactor,
        cofactor_divides_char_poly,
        lower_degree_relation: lower,
    })
}
