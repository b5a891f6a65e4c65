//! Dense matrices over the Gaussian rationals.
//!
//! Matrices are immutable after construction. Row reduction is fully
//! deterministic: the pivot in each column is the first row with a nonzero
//! entry, with no magnitude-based pivoting, so two equal inputs always
//! reduce to byte-identical results.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::Error;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use crate::vector::SparseVector;

/// Dense `rows x cols` matrix, both dimensions at least 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::RaggedRows);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal rows; convenience for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect())
                .collect(),
        )
        .expect("integer literal rows must be rectangular and nonempty")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Columns given as sparse vectors over row indices `1..=rows`.
    pub fn from_sparse_columns(columns: &[SparseVector], rows: usize) -> Result<Self, Error> {
        if columns.is_empty() || rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter() {
                if *i > rows {
                    return Err(Error::IndexOutOfRange { index: *i, dim: rows });
                }
                m.set(i - 1, j, v.clone());
            }
        }
        Ok(m)
    }

    /// Rows given as sparse vectors over column indices `1..=cols`.
    pub fn from_sparse_rows(rows: &[SparseVector], cols: usize) -> Result<Self, Error> {
        if rows.is_empty() || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter() {
                if *j > cols {
                    return Err(Error::IndexOutOfRange { index: *j, dim: cols });
                }
                m.set(i, j - 1, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.data[row * self.cols + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Column `col` (0-based) as a sparse vector over `1..=rows`.
    pub fn column(&self, col: usize) -> SparseVector {
        SparseVector::from_dense(
            &(0..self.rows)
                .map(|i| self.get(i, col).clone())
                .collect::<Vec<_>>(),
        )
    }

    /// Row `row` (0-based) as a sparse vector over `1..=cols`.
    pub fn row(&self, row: usize) -> SparseVector {
        SparseVector::from_dense(&self.data[row * self.cols..(row + 1) * self.cols])
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).conj())
    }

    /// Conjugate transpose.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| c * self.get(i, j))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        self.require_same_shape(rhs)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + rhs.get(i, j)
        }))
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        self.require_same_shape(rhs)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - rhs.get(i, j)
        }))
    }

    fn require_same_shape(&self, rhs: &Matrix) -> Result<(), Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix applied to dense coordinates.
    pub fn mul_dense_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (k, xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            for (i, acc) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *acc = &*acc + &(a * xv);
                }
            }
        }
        Ok(out)
    }

    /// Matrix applied to a sparse vector over `1..=cols`, producing a
    /// sparse vector over `1..=rows`.
    pub fn apply(&self, x: &SparseVector) -> Result<SparseVector, Error> {
        if let Some(max) = x.max_index() {
            if max > self.cols {
                return Err(Error::IndexOutOfRange {
                    index: max,
                    dim: self.cols,
                });
            }
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, xv) in x.iter() {
            for (i, acc) in out.iter_mut().enumerate() {
                let a = self.get(i, j - 1);
                if !a.is_zero() {
                    *acc = &*acc + &(a * xv);
                }
            }
        }
        Ok(SparseVector::from_dense(&out))
    }

    pub fn pow(&self, k: usize) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Places `other` at row offset `ro`, column offset `co`.
    pub(crate) fn paste(&mut self, other: &Matrix, ro: usize, co: usize) {
        for i in 0..other.rows {
            for j in 0..other.cols {
                self.set(ro + i, co + j, other.get(i, j).clone());
            }
        }
    }

    /// Block-diagonal matrix assembled from square or rectangular blocks.
    pub fn block_diagonal(blocks: &[Matrix]) -> Result<Matrix, Error> {
        if blocks.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.paste(b, ro, co);
            ro += b.rows;
            co += b.cols;
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form together with the pivot columns, numbered
    /// from 1 like every coordinate index in this crate.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (m, pivots) = self.rref0();
        (m, pivots.into_iter().map(|c| c + 1).collect())
    }

    /// Reduced row echelon form with 0-based pivot columns, for internal
    /// positional arithmetic. The pivot for each column is the first
    /// candidate row holding a nonzero entry; there is no magnitude-based
    /// pivoting, so the reduction is deterministic.
    pub(crate) fn rref0(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&factor * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref0().1.len()
    }

    /// Basis of the null space, one vector per free column, ordered by
    /// free column index. Vectors live over `1..=cols`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref0();
        let mut basis = Vec::new();
        let is_pivot = {
            let mut flags = vec![false; self.cols];
            for &p in &pivots {
                flags[p] = true;
            }
            flags
        };
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut coords = vec![Scalar::zero(); self.cols];
            coords[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                coords[p] = -r.get(row, free);
            }
            basis.push(SparseVector::from_dense(&coords));
        }
        Subspace::new_unchecked(self.cols, basis)
    }

    /// Basis of the column space: the pivot columns of the original
    /// matrix, in column order. Vectors live over `1..=rows`.
    pub fn image_basis(&self) -> Subspace {
        let (_, pivots) = self.rref0();
        let basis = pivots.iter().map(|&c| self.column(c)).collect();
        Subspace::new_unchecked(self.rows, basis)
    }

    /// Exact inverse of a square matrix, or `Error::Singular`.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        aug.paste(self, 0, 0);
        aug.paste(&Matrix::identity(n), 0, n);
        let (r, pivots) = aug.rref0();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Exact determinant of a square matrix.
    pub fn determinant(&self) -> Result<Scalar, Error> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -&det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in (c + 1)..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading_principal(&self, k: usize) -> Result<Matrix, Error> {
        if k == 0 || k > self.rows || k > self.cols {
            return Err(Error::IndexOutOfRange {
                index: k,
                dim: self.rows.min(self.cols),
            });
        }
        Ok(Matrix::from_fn(k, k, |i, j| self.get(i, j).clone()))
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix shapes must agree")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix shapes must agree")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix:", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
