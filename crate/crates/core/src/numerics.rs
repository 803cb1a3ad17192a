//! Complex scalars, a plain row-major dense matrix, and the brute-force
//! oracle routines (multiplication, binary exponentiation, Gaussian
//! elimination) that every closed form is checked against.
//!
//! Nothing here knows about the structured families; the oracle stays
//! deliberately naive.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Double-precision complex number.
pub type ComplexScalar = Complex64;

/// Pivots smaller than this fraction of the largest initial entry are
/// treated as zero by [`mat_inverse`] and [`mat_det`].
pub const SINGULAR_REL_TOL: f64 = 1e-12;

#[inline]
pub fn c64(re: f64, im: f64) -> ComplexScalar {
    Complex64::new(re, im)
}

pub fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `z^exp` for integer `exp` by squaring. Negative exponents invert first,
/// so no complex logarithm is involved.
pub fn complex_powi(z: ComplexScalar, exp: i64) -> ComplexScalar {
    let (mut base, mut e) = if exp < 0 {
        (z.inv(), exp.unsigned_abs())
    } else {
        (z, exp as u64)
    };
    let mut acc = c64(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        e >>= 1;
        if e > 0 {
            base *= base;
        }
    }
    acc
}

/// Square `n x n` complex matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<ComplexScalar>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        Self {
            n,
            data: vec![ComplexScalar::default(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = c64(1.0, 0.0);
        }
        m
    }

    pub fn diagonal(values: &[ComplexScalar]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ComplexScalar) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Builds a matrix from a flat row-major vector of length `n * n`.
    pub fn from_row_major(n: usize, data: Vec<ComplexScalar>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(Error::BadShape {
                len: data.len(),
                expected: n * n,
            });
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: &[Vec<ComplexScalar>]) -> Result<Self> {
        let n = rows.len();
        let data: Vec<_> = rows.iter().flatten().copied().collect();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape {
                len: data.len(),
                expected: n * n,
            });
        }
        Self::from_row_major(n, data)
    }

    /// Real-valued convenience constructor, mostly for tests.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<ComplexScalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c64(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[ComplexScalar] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.data.chunks_exact(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<ComplexScalar> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn scale(&self, factor: ComplexScalar) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
        assert_eq!(v.len(), self.n);
        self.rows()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| is_finite(*z))
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = ComplexScalar;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexScalar {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix({}x{}) [", self.n, self.n)?;
        for row in self.rows() {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>12.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|z| format!("{:>10.6}{:+.6}i", z.re, z.im))
                .collect();
            write!(f, "{}", cells.join("  "))?;
        }
        Ok(())
    }
}

fn check_dims(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<()> {
    if lhs.n != rhs.n {
        return Err(Error::DimensionMismatch {
            left: lhs.n,
            right: rhs.n,
        });
    }
    Ok(())
}

/// Plain triple-loop product.
pub fn mat_mul(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<DenseMatrix> {
    check_dims(lhs, rhs)?;
    let n = lhs.n;
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for k in 0..n {
            let l = lhs[(i, k)];
            let rrow = rhs.row(k);
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (o, r) in orow.iter_mut().zip(rrow) {
                *o += l * r;
            }
        }
    }
    Ok(out)
}

/// `m^s` by repeated squaring; `s = 0` gives the identity.
pub fn mat_pow_binary(m: &DenseMatrix, s: u64) -> DenseMatrix {
    let mut result = DenseMatrix::identity(m.n);
    if s == 0 {
        return result;
    }
    let mut base = m.clone();
    let mut e = s;
    let mut first = true;
    loop {
        if e & 1 == 1 {
            result = if first {
                first = false;
                base.clone()
            } else {
                mat_mul(&result, &base).expect("same dimension")
            };
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = mat_mul(&base, &base).expect("same dimension");
    }
    result
}

/// Gauss-Jordan inverse with partial pivoting by complex modulus.
pub fn mat_inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.n;
    let scale = mat_norm_maxabs(m);
    let threshold = SINGULAR_REL_TOL * scale;
    let mut work = m.clone();
    let mut inv = DenseMatrix::identity(n);

    for col in 0..n {
        let (pivot_row, pivot_mod) = (col..n)
            .map(|r| (r, work[(r, col)].norm()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if scale == 0.0 || pivot_mod <= threshold {
            return Err(Error::Singular {
                column: col,
                pivot: pivot_mod.max(0.0),
            });
        }
        if pivot_row != col {
            swap_rows(&mut work, pivot_row, col);
            swap_rows(&mut inv, pivot_row, col);
        }
        let p = work[(col, col)].inv();
        for j in 0..n {
            work[(col, j)] *= p;
            inv[(col, j)] *= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = work[(r, col)];
            if f == ComplexScalar::default() {
                continue;
            }
            for j in 0..n {
                let wc = work[(col, j)];
                let ic = inv[(col, j)];
                work[(r, j)] -= f * wc;
                inv[(r, j)] -= f * ic;
            }
        }
    }
    Ok(inv)
}

/// Determinant by LU factorisation with partial pivoting. Unlike
/// [`mat_inverse`] a zero pivot is not an error: the determinant is zero.
pub fn mat_det(m: &DenseMatrix) -> ComplexScalar {
    let n = m.n;
    let mut work = m.clone();
    let mut det = c64(1.0, 0.0);
    for col in 0..n {
        let (pivot_row, pivot_mod) = (col..n)
            .map(|r| (r, work[(r, col)].norm()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_mod == 0.0 {
            return ComplexScalar::default();
        }
        if pivot_row != col {
            swap_rows(&mut work, pivot_row, col);
            det = -det;
        }
        let p = work[(col, col)];
        det *= p;
        for r in col + 1..n {
            let f = work[(r, col)] / p;
            for j in col..n {
                let v = work[(col, j)];
                work[(r, j)] -= f * v;
            }
        }
    }
    det
}

fn swap_rows(m: &mut DenseMatrix, a: usize, b: usize) {
    let n = m.n;
    for j in 0..n {
        m.data.swap(a * n + j, b * n + j);
    }
}

/// Largest entry modulus.
pub fn mat_norm_maxabs(m: &DenseMatrix) -> f64 {
    m.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest entrywise modulus of `lhs - rhs`.
pub fn max_abs_diff(lhs: &DenseMatrix, rhs: &DenseMatrix) -> Result<f64> {
    check_dims(lhs, rhs)?;
    Ok(lhs
        .data
        .iter()
        .zip(&rhs.data)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

pub fn mat_approx_eq(lhs: &DenseMatrix, rhs: &DenseMatrix, tol: f64) -> Result<bool> {
    Ok(max_abs_diff(lhs, rhs)? <= tol)
}
