//! Dense complex eigenvalues: diagonal balancing, Householder reduction to
//! upper Hessenberg form, then single-shift QR with Wilkinson shifts.

use super::dense::Mat;
use super::scalar::{Complex, Field};
use crate::error::{Error, Result};

type Rows = Vec<Vec<Complex>>;

fn cabs1(z: Complex) -> f64 {
    z.re.abs() + z.im.abs()
}

/// Parlett–Reinsch balancing by powers of two; similarity-invariant.
fn balance(h: &mut Rows) {
    let n = h.len();
    const RADIX: f64 = 2.0;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += cabs1(h[j][i]);
                    r += cabs1(h[i][j]);
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            let mut cc = c;
            while cc < g {
                f *= RADIX;
                cc *= RADIX * RADIX;
            }
            g = r * RADIX;
            while cc > g {
                f /= RADIX;
                cc /= RADIX * RADIX;
            }
            if (cc + r / f) / f < 0.95 * s {
                done = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    h[i][j] *= inv;
                }
                for row in h.iter_mut() {
                    row[i] *= f;
                }
            }
        }
    }
}

fn hessenberg(h: &mut Rows) {
    let n = h.len();
    for k in 0..n.saturating_sub(2) {
        let norm: f64 = (k + 1..n).map(|i| h[i][k].norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = h[k + 1][k];
        let phase = if x0.norm() == 0.0 {
            Complex::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let mut v: Vec<Complex> = (k + 1..n).map(|i| h[i][k]).collect();
        v[0] += phase * norm;
        let vnorm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // H ← (I − 2vvᴴ) H (I − 2vvᴴ)
        for j in 0..n {
            let dot: Complex = (0..v.len()).map(|a| v[a].conj() * h[k + 1 + a][j]).sum();
            for a in 0..v.len() {
                h[k + 1 + a][j] -= v[a] * dot * 2.0;
            }
        }
        for row in h.iter_mut() {
            let dot: Complex = (0..v.len()).map(|a| row[k + 1 + a] * v[a]).sum();
            for a in 0..v.len() {
                row[k + 1 + a] -= dot * v[a].conj() * 2.0;
            }
        }
        for row in h.iter_mut().skip(k + 2) {
            row[k] = Complex::new(0.0, 0.0);
        }
    }
}

fn wilkinson_shift(a: Complex, b: Complex, c: Complex, d: Complex) -> Complex {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m1 = (a + d) * 0.5 + disc;
    let m2 = (a + d) * 0.5 - disc;
    if (m1 - d).norm() < (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// All eigenvalues of a square complex matrix, in no particular order.
pub fn eigenvalues(a: &Mat<Complex>) -> Result<Vec<Complex>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let n = a.rows();
    let mut h = a.to_rows();
    balance(&mut h);
    hessenberg(&mut h);

    let mut eig = vec![Complex::new(0.0, 0.0); n];
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    loop {
        if hi == 0 {
            eig[0] = h[0][0];
            break;
        }
        let mut lo = hi;
        while lo > 0 {
            let s = cabs1(h[lo - 1][lo - 1]) + cabs1(h[lo][lo]);
            let s = if s == 0.0 { 1.0 } else { s };
            if cabs1(h[lo][lo - 1]) <= f64::EPSILON * s {
                h[lo][lo - 1] = Complex::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig[hi] = h[hi][hi];
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if total > 60 * n.max(10) {
            return Err(Error::NoConvergence);
        }
        let mu = if iter % 11 == 10 {
            // Exceptional shift to break cycles.
            h[hi][hi] + Complex::new(0.75 * cabs1(h[hi][hi - 1]), 0.0)
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        qr_step(&mut h, lo, hi, mu);
    }
    Ok(eig)
}

fn qr_step(h: &mut Rows, lo: usize, hi: usize, mu: Complex) {
    for i in lo..=hi {
        h[i][i] -= mu;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let x = h[k][k];
        let y = h[k + 1][k];
        let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
        let (c, s) = if r == 0.0 {
            (Complex::new(1.0, 0.0), Complex::new(0.0, 0.0))
        } else {
            (x / r, y / r)
        };
        for j in k..=hi {
            let a = h[k][j];
            let b = h[k + 1][j];
            h[k][j] = c.conj() * a + s.conj() * b;
            h[k + 1][j] = -s * a + c * b;
        }
        rots.push((c, s));
    }
    for (idx, &(c, s)) in rots.iter().enumerate() {
        let k = lo + idx;
        for row in h.iter_mut().take((k + 1).min(hi) + 1).skip(lo) {
            let a = row[k];
            let b = row[k + 1];
            row[k] = a * c + b * s;
            row[k + 1] = -a * s.conj() + b * c.conj();
        }
    }
    for i in lo..=hi {
        h[i][i] += mu;
    }
}

/// Orders complex numbers by real part, then imaginary part.
pub fn sort_complex(v: &mut [Complex]) {
    v.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}

/// Minimum-cost perfect matching between two equally sized multisets of
/// complex numbers (Hungarian algorithm on `|a_i − b_j|`). Returns the
/// largest matched distance, or `None` when the sizes differ.
pub fn match_multisets(a: &[Complex], b: &[Complex]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    if n == 0 {
        return Some(0.0);
    }
    let cost = |i: usize, j: usize| (a[i] - b[j]).norm();
    // Potentials-based O(n³) assignment, 1-based internally.
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    Some((1..=n).map(|j| cost(p[j] - 1, j - 1)).fold(0.0, f64::max))
}

/// Convenience wrapper converting from any field.
pub fn eigenvalues_of<T: Field>(a: &Mat<T>) -> Result<Vec<Complex>> {
    eigenvalues(&a.to_complex())
}
