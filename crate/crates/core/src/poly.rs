//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::Result;
use crate::kernel::eigen::eigenvalues;
use crate::kernel::scalar::{rational_to_f64, Complex, Field, Rational};
use crate::kernel::Mat;

/// Coefficients in ascending degree; the zero polynomial has none.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// One root of a rational polynomial together with its multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub value: Complex,
    /// Set when the root is rational and was found exactly.
    pub exact: Option<Rational>,
    pub multiplicity: usize,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        Poly { coeffs: c }
    }

    /// `x − r`.
    pub fn linear_factor(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Rational::one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Field::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if Field::is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, x: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(0.0, 0.0), |acc, c| acc * x + rational_to_f64(c))
    }

    /// `p(A) = Σ c_k A^k` for a square matrix `A`.
    pub fn eval_matrix<T: Field>(&self, a: &Mat<T>, embed: impl Fn(&Rational) -> T) -> Mat<T> {
        let n = a.rows();
        let mut acc = Mat::<T>::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc
                .matmul(a)
                .expect("square")
                .add(&Mat::<T>::identity(n).scale(&embed(c)))
                .expect("equal shapes");
        }
        acc
    }

    /// Square-free decomposition `p = lc · Π f_i^i` (Yun); returns the
    /// nonconstant monic `f_i` with their multiplicities `i`.
    pub fn squarefree(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let b_next = b.div_rem(&a).0;
            let c_next = d.div_rem(&a).0;
            d = c_next.sub(&b_next.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            b = b_next;
            i += 1;
        }
        out
    }

    /// The primitive integer polynomial proportional to `self`.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::from(0), |acc, c| acc.gcd(c));
        if g == BigInt::from(0) {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        }
    }

    /// Numeric roots with multiplicity (meant for square-free input).
    pub fn roots_numeric(&self) -> Result<Vec<Complex>> {
        let Some(deg) = self.degree() else {
            return Ok(vec![]);
        };
        let p = self.monic();
        let cf: Vec<f64> = p.coeffs.iter().map(rational_to_f64).collect();
        match deg {
            0 => Ok(vec![]),
            1 => Ok(vec![Complex::new(-cf[0], 0.0)]),
            2 => {
                let (b, c) = (cf[1], cf[0]);
                let disc = b * b - 4.0 * c;
                if disc >= 0.0 {
                    let s = disc.sqrt();
                    // Avoid cancellation: pick the larger-magnitude root first.
                    let r1 = if b >= 0.0 { (-b - s) / 2.0 } else { (-b + s) / 2.0 };
                    let r2 = if r1 != 0.0 { c / r1 } else { -b - r1 };
                    Ok(vec![Complex::new(r1, 0.0), Complex::new(r2, 0.0)])
                } else {
                    let im = (-disc).sqrt() / 2.0;
                    Ok(vec![Complex::new(-b / 2.0, im), Complex::new(-b / 2.0, -im)])
                }
            }
            _ => {
                let companion = Mat::from_fn(deg, deg, |i, j| {
                    if i == 0 {
                        Complex::new(-cf[deg - 1 - j], 0.0)
                    } else if i == j + 1 {
                        Complex::new(1.0, 0.0)
                    } else {
                        Complex::new(0.0, 0.0)
                    }
                });
                let dp = p.derivative();
                eigenvalues(&companion).map(|roots| {
                    roots.into_iter().map(|z| newton_polish(&p, &dp, z)).collect()
                })
            }
        }
    }

    /// Rational roots of `self` (each listed once), found by trial over
    /// candidate denominators dividing the leading integer coefficient.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        let Some(deg) = self.degree() else {
            return Ok(vec![]);
        };
        if deg == 0 {
            return Ok(vec![]);
        }
        let mut found = Vec::new();
        let mut rest = self.monic();
        while Field::is_zero(&rest.coeff(0)) && rest.degree().unwrap_or(0) > 0 {
            if !found.iter().any(|r: &Rational| Field::is_zero(r)) {
                found.push(Rational::zero());
            }
            rest = rest.div_rem(&Poly::monomial(1)).0;
        }
        if rest.degree().unwrap_or(0) == 0 {
            return Ok(found);
        }
        let ints = rest.integer_coeffs();
        let lead = ints.last().expect("nonzero").abs();
        let denominators = small_divisors(&lead);
        for z in rest.roots_numeric()? {
            if z.im.abs() > 1e-6 * z.norm().max(1.0) {
                continue;
            }
            for den in &denominators {
                let num = (z.re * den.to_f64().unwrap_or(f64::INFINITY)).round();
                if !num.is_finite() {
                    continue;
                }
                let Some(num) = BigInt::from_f64_checked(num) else {
                    continue;
                };
                let cand = Rational::new(num, den.clone());
                if Field::is_zero(&rest.eval(&cand)) && !found.contains(&cand) {
                    found.push(cand);
                    break;
                }
            }
        }
        Ok(found)
    }

    /// All roots with multiplicities: square-free factorisation, exact
    /// rational roots, then numeric roots of the remaining simple factors.
    pub fn roots(&self) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for (factor, mult) in self.squarefree() {
            let mut rest = factor.clone();
            for r in factor.rational_roots()? {
                rest = rest.div_rem(&Poly::linear_factor(&r)).0;
                out.push(Root {
                    value: r.to_complex(),
                    exact: Some(r),
                    multiplicity: mult,
                });
            }
            for z in rest.roots_numeric()? {
                out.push(Root {
                    value: z,
                    exact: None,
                    multiplicity: mult,
                });
            }
        }
        Ok(out)
    }

    /// Coefficients as strings in ascending order (`"p/q"` or integers).
    pub fn coeff_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

trait FromF64Checked: Sized {
    fn from_f64_checked(v: f64) -> Option<Self>;
}

impl FromF64Checked for BigInt {
    fn from_f64_checked(v: f64) -> Option<Self> {
        num_traits::FromPrimitive::from_f64(v)
    }
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    let Some(v) = n.to_u64() else {
        return vec![BigInt::from(1)];
    };
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v && d <= 1_000_000 {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d != v / d {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn newton_polish(p: &Poly, dp: &Poly, mut z: Complex) -> Complex {
    for _ in 0..8 {
        let f = p.eval_complex(z);
        let d = dp.eval_complex(z);
        if d.norm() == 0.0 {
            break;
        }
        let step = f / d;
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Field::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = mag != Rational::one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar::{q, qr};

    #[test]
    fn display_is_readable() {
        let p = Poly::from_i64(&[0, 1, 2, -2, -2, 1]);
        assert_eq!(p.to_string(), "x^5 - 2x^4 - 2x^3 + 2x^2 + x");
        assert_eq!(Poly::new(vec![qr(-1, 2)]).to_string(), "-1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_i64(&[-1, 0, 1]); // x² − 1
        let b = Poly::from_i64(&[1, 1]); // x + 1
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(quo, Poly::from_i64(&[-1, 1]));
        assert!(rem.is_zero());
        let c = Poly::from_i64(&[2, 3, 1]); // (x+1)(x+2)
        assert_eq!(a.gcd(&c), b);
    }

    #[test]
    fn squarefree_of_repeated_factors() {
        // x³ (x − 1)² (x² + 1)
        let p = Poly::monomial(3)
            .mul(&Poly::from_i64(&[-1, 1]).pow(2))
            .mul(&Poly::from_i64(&[1, 0, 1]));
        let sf = p.squarefree();
        assert_eq!(
            sf,
            vec![
                (Poly::from_i64(&[1, 0, 1]), 1),
                (Poly::from_i64(&[-1, 1]), 2),
                (Poly::monomial(1), 3)
            ]
        );
    }

    #[test]
    fn roots_with_multiplicity() {
        let p = Poly::monomial(2)
            .mul(&Poly::from_i64(&[-3, 2]))
            .mul(&Poly::from_i64(&[-2, 0, 1]));
        let roots = p.roots().unwrap();
        let zero = roots.iter().find(|r| r.exact == Some(q(0))).unwrap();
        assert_eq!(zero.multiplicity, 2);
        assert!(roots.iter().any(|r| r.exact == Some(qr(3, 2))));
        let irr: Vec<_> = roots.iter().filter(|r| r.exact.is_none()).collect();
        assert_eq!(irr.len(), 2);
        for r in irr {
            assert!((r.value.re.abs() - 2f64.sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn matrix_evaluation() {
        let a = Mat::<Rational>::from_i64_rows(&[&[0, 1], &[0, 0]]);
        let p = Poly::monomial(2);
        assert!(p.eval_matrix(&a, |c| c.clone()).is_zero());
        assert_eq!(Poly::from_i64(&[3]).eval_matrix(&a, |c| c.clone()), Mat::identity(2).scale(&q(3)));
    }
}
