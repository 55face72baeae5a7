use std::fmt;
use std::ops::Mul;

use crate::algebra::scalar::{real_max, Scalar};
use crate::error::AlgebraError;

/// Dense square matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<F> {
    n: usize,
    entries: Vec<F>,
}

impl<F: Scalar> SquareMatrix<F> {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![F::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn scalar(n: usize, c: F) -> Self {
        Self::identity(n).scale(&c)
    }

    pub fn diagonal(diag: &[F]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(AlgebraError::Shape { expected: n, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    /// Builds a matrix from small integer entries; handy for fixtures.
    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        let entries = rows.iter().flatten().map(|&v| F::from_int(v)).collect();
        Self { n: N, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    fn check_dim(&self, other: usize) -> Result<(), AlgebraError> {
        if self.n == other {
            Ok(())
        } else {
            Err(AlgebraError::Shape { expected: self.n, got: other })
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(rhs.n)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = F::zero();
                for k in 0..n {
                    acc = acc + self.get(i, k).clone() * rhs.get(k, j).clone();
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(rhs.n)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { n: self.n, entries })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(rhs.n)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { n: self.n, entries })
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, AlgebraError> {
        self.check_dim(v.len())?;
        Ok(self
            .rows()
            .map(|row| row.iter().zip(v).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect())
    }

    /// Row vector times matrix, `v^T M`.
    pub fn vec_mul(&self, v: &[F]) -> Result<Vec<F>, AlgebraError> {
        self.check_dim(v.len())?;
        Ok((0..self.n)
            .map(|j| (0..self.n).fold(F::zero(), |acc, i| acc + v[i].clone() * self.get(i, j).clone()))
            .collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|e| e.clone() * c.clone()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        (0..self.n).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_negligible())
    }

    pub fn max_modulus(&self) -> F::Real {
        self.entries.iter().fold(F::real_zero(), |acc, e| real_max::<F>(acc, e.modulus()))
    }

    /// Index of the entry with the largest modulus (first one on ties).
    pub fn argmax_modulus(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, F::Real)> = None;
        for (idx, e) in self.entries.iter().enumerate() {
            let m = e.modulus();
            if best.as_ref().is_none_or(|(_, b)| m > *b) {
                best = Some((idx, m));
            }
        }
        best.map(|(idx, _)| (idx / self.n, idx % self.n))
    }

    /// Gaussian elimination. Exact backend pivots on the first nonzero entry,
    /// float backend on the largest modulus in the column.
    pub fn determinant(&self) -> F {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = pivot_row(&a, n, col) else {
                return F::zero();
            };
            if p != col {
                for j in 0..n {
                    a.swap(col * n + j, p * n + j);
                }
                det = -det;
            }
            let piv = a[col * n + col].clone();
            det = det * piv.clone();
            for r in col + 1..n {
                let f = a[r * n + col].clone() / piv.clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[r * n + j].clone() - f.clone() * a[col * n + j].clone();
                    a[r * n + j] = v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_negligible()
    }

    pub fn ensure_invertible(&self) -> Result<(), AlgebraError> {
        if self.is_invertible() {
            Ok(())
        } else {
            Err(AlgebraError::InvalidGroupElement)
        }
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let p = pivot_row(&a, n, col).ok_or(AlgebraError::InvalidGroupElement)?;
            if p != col {
                for j in 0..n {
                    a.swap(col * n + j, p * n + j);
                    inv.swap(col * n + j, p * n + j);
                }
            }
            let piv_inv = a[col * n + col].inverse()?;
            for j in 0..n {
                a[col * n + j] = a[col * n + j].clone() * piv_inv.clone();
                inv[col * n + j] = inv[col * n + j].clone() * piv_inv.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = a[r * n + j].clone() - f.clone() * a[col * n + j].clone();
                    inv[r * n + j] = inv[r * n + j].clone() - f.clone() * inv[col * n + j].clone();
                }
            }
        }
        Ok(Self { n, entries: inv })
    }

    /// `s m s^{-1}`.
    pub fn conjugate_by(&self, s: &Self) -> Result<Self, AlgebraError> {
        s.try_mul(self)?.try_mul(&s.inverse()?)
    }
}

fn pivot_row<F: Scalar>(a: &[F], n: usize, col: usize) -> Option<usize> {
    let candidates = (col..n).filter(|&r| !a[r * n + col].is_negligible());
    match F::BACKEND {
        crate::algebra::Backend::ExactRational => candidates.into_iter().next(),
        crate::algebra::Backend::ComplexFloat => {
            let mut best: Option<(usize, F::Real)> = None;
            for r in candidates {
                let m = a[r * n + col].modulus();
                if best.as_ref().is_none_or(|(_, b)| m > *b) {
                    best = Some((r, m));
                }
            }
            best.map(|(r, _)| r)
        }
    }
}

impl<F: Scalar> Mul for &SquareMatrix<F> {
    type Output = SquareMatrix<F>;

    /// Panics on a dimension mismatch; use [`SquareMatrix::try_mul`] otherwise.
    fn mul(self, rhs: Self) -> SquareMatrix<F> {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<F: Scalar> fmt::Debug for SquareMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows().map(|r| r.iter().map(|e| e.render()).collect::<Vec<_>>())).finish()
    }
}
