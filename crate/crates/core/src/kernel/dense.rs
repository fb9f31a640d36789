use std::fmt;

use super::scalar::{Complex, Field, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                found: data.len(),
            });
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::RaggedRows {
                    row: i + 1,
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix of small integers; panics on an empty or ragged literal.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
        .expect("well-formed literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The all-ones column `1_n`.
    pub fn ones_column(n: usize) -> Self {
        Self::from_fn(n, 1, |_, _| T::one())
    }

    /// The column `δ_n^i` (1-based `i`).
    pub fn delta(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "delta index out of range");
        Self::from_fn(n, 1, |r, _| if r + 1 == i { T::one() } else { T::zero() })
    }

    /// The logical matrix `δ_n[i_1, …, i_k]` whose column `j` is `δ_n^{i_j}`.
    pub fn logical(n: usize, cols: &[usize]) -> Self {
        assert!(cols.iter().all(|&i| i >= 1 && i <= n), "delta index out of range");
        Self::from_fn(n, cols.len(), |r, j| {
            if cols[j] == r + 1 {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    pub fn column_vector(v: Vec<T>) -> Result<Self> {
        let n = v.len();
        Self::new(n, 1, v)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_column(&self) -> bool {
        self.cols == 1
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Mat<T> {
        Mat::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The `h×w` sub-block whose top-left entry is `(i0, j0)`.
    pub fn block(&self, i0: usize, j0: usize, h: usize, w: usize) -> Mat<T> {
        Mat::from_fn(h, w, |i, j| self.get(i0 + i, j0 + j).clone())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    fn same_shape(&self, other: &Mat<T>, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Mat<T>) -> Result<Mat<T>> {
        self.same_shape(other, "add")?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn sub(&self, other: &Mat<T>) -> Result<Mat<T>> {
        self.same_shape(other, "sub")?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    fn zip(&self, other: &Mat<T>, f: impl Fn(&T, &T) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        self.map(|a| s.clone() * a.clone())
    }

    pub fn matmul(&self, other: &Mat<T>) -> Result<Mat<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Mat::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Result<Mat<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.matmul(self)?;
        }
        Ok(out)
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i, j]·other`.
    pub fn kron(&self, other: &Mat<T>) -> Mat<T> {
        let (p, q) = other.shape();
        Mat::from_fn(self.rows * p, self.cols * q, |i, j| {
            let a = self.get(i / p, j / q);
            if a.is_zero() {
                return T::zero();
            }
            a.clone() * other.get(i % p, j % q).clone()
        })
    }

    /// `self ⊗ I_k`.
    pub fn kron_identity(&self, k: usize) -> Mat<T> {
        if k == 1 {
            return self.clone();
        }
        Mat::from_fn(self.rows * k, self.cols * k, |i, j| {
            if i % k == j % k {
                self.get(i / k, j / k).clone()
            } else {
                T::zero()
            }
        })
    }

    /// `I_k ⊗ self`.
    pub fn identity_kron(&self, k: usize) -> Mat<T> {
        if k == 1 {
            return self.clone();
        }
        let (m, n) = self.shape();
        Mat::from_fn(m * k, n * k, |i, j| {
            if i / m == j / n {
                self.get(i % m, j % n).clone()
            } else {
                T::zero()
            }
        })
    }

    /// `self ⊗ 1_k`: every row repeated `k` times.
    pub fn kron_ones(&self, k: usize) -> Mat<T> {
        if k == 1 {
            return self.clone();
        }
        Mat::from_fn(self.rows * k, self.cols, |i, j| self.get(i / k, j).clone())
    }

    /// `1_k ⊗ self`: the whole matrix stacked `k` times.
    pub fn ones_kron(&self, k: usize) -> Mat<T> {
        if k == 1 {
            return self.clone();
        }
        Mat::from_fn(self.rows * k, self.cols, |i, j| {
            self.get(i % self.rows, j).clone()
        })
    }

    pub fn trace(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i).clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn near_zero(&self, tol: f64) -> bool {
        self.data.iter().all(|x| x.near_zero(tol))
    }

    /// Entrywise equality; exact for rationals, within `tol` for floats.
    pub fn near(&self, other: &Mat<T>, tol: f64) -> bool {
        self.shape() == other.shape()
            && self.data.iter().zip(&other.data).all(|(a, b)| a.near(b, tol))
    }

    pub fn to_complex(&self) -> Mat<Complex> {
        self.map(Field::to_complex)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Field::magnitude).fold(0.0, f64::max)
    }
}

impl Mat<Complex> {
    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// 1-norm (maximum absolute column sum).
    pub fn norm_one(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mat<Rational> {
    pub fn from_ratio_rows(rows: &[&[(i64, i64)]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| Rational::from_ratio(n, d)).collect())
                .collect(),
        )
        .expect("well-formed literal")
    }
}

impl<T: Field + fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        f.write_str("]")
    }
}
