//! Positive definite Hermitian forms given by their Gram matrices.
//!
//! A `GramForm` on dimension `n` evaluates the inner product
//! `g(v, w) = sum over i, j of v_i * conj(w_j) * G[i][j]`,
//! linear in the first argument and conjugate-linear in the second.
//! Construction certifies the two properties everything downstream rests
//! on: conjugate symmetry and positive definiteness, the latter by
//! checking that every leading principal minor is a positive real
//! rational.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::vector::SparseVector;

/// Certified positive definite Hermitian form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramForm {
    gram: Matrix,
    identity: bool,
}

impl GramForm {
    /// Standard inner product on `dim` coordinates.
    pub fn identity(dim: usize) -> Self {
        GramForm {
            gram: Matrix::identity(dim),
            identity: true,
        }
    }

    /// Builds and certifies a form from its Gram matrix rows.
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let gram = Matrix::from_rows(rows)?;
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        for i in 0..gram.rows() {
            for j in 0..gram.cols() {
                if gram.get(i, j) != &gram.get(j, i).conj() {
                    return Err(Error::NotConjugateSymmetric);
                }
            }
        }
        for k in 1..=gram.rows() {
            let minor = gram.leading_principal(k)?.determinant()?;
            if !minor.is_real() || minor.re() <= &Rational::from_integer(0.into()) {
                return Err(Error::NotPositiveDefinite { order: k });
            }
        }
        let identity = gram == Matrix::identity(gram.rows());
        Ok(GramForm { gram, identity })
    }

    /// Wraps an already-certified Gram matrix; restriction to a basis of
    /// an independent family preserves both certified properties.
    fn from_certified(gram: Matrix) -> Self {
        let identity = gram == Matrix::identity(gram.rows());
        GramForm { gram, identity }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_standard(&self) -> bool {
        self.identity
    }

    /// The Gram matrix itself.
    pub fn matrix(&self) -> &Matrix {
        &self.gram
    }

    /// `g(v, w)`, linear in `v`, conjugate-linear in `w`.
    pub fn inner_product(&self, v: &SparseVector, w: &SparseVector) -> Result<Scalar, Error> {
        let dim = self.dim();
        for x in [v, w] {
            if let Some(max) = x.max_index() {
                if max > dim {
                    return Err(Error::IndexOutOfRange { index: max, dim });
                }
            }
        }
        if self.identity {
            return Ok(v.inner_product_std(w));
        }
        let mut total = Scalar::zero();
        for (i, a) in v.iter() {
            for (j, b) in w.iter() {
                let weight = self.gram.get(i - 1, j - 1);
                if weight.is_zero() {
                    continue;
                }
                total = &total + &(&(a * &b.conj()) * weight);
            }
        }
        Ok(total)
    }

    /// `g(v, v)` as an exact rational. Positive definiteness makes this
    /// real, and positive for nonzero `v`.
    pub fn norm_squared(&self, v: &SparseVector) -> Result<Rational, Error> {
        let value = self.inner_product(v, v)?;
        debug_assert!(value.is_real(), "norm of a certified form is real");
        Ok(value.re().clone())
    }

    /// The form restricted to the span of an independent family:
    /// `G'[a][b] = g(basis[a], basis[b])`. The family must be independent
    /// for the result to be positive definite; dependence is reported as
    /// an error because the restricted matrix then fails certification.
    pub fn restrict(&self, basis: &[SparseVector]) -> Result<GramForm, Error> {
        if basis.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let k = basis.len();
        let mut rows = Vec::with_capacity(k);
        for a in 0..k {
            let mut row = Vec::with_capacity(k);
            for b in 0..k {
                row.push(self.inner_product(&basis[a], &basis[b])?);
            }
            rows.push(row);
        }
        // Re-certify: this doubles as an independence check on the basis.
        let restricted = GramForm::new(rows)?;
        Ok(GramForm::from_certified(restricted.gram))
    }
}
