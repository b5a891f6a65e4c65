//! Subspaces of a finite-dimensional coordinate space, given by bases.
//!
//! A subspace never identifies itself with a particular basis for
//! comparison purposes: containment and equality are rank computations,
//! so two different bases of the same space compare equal.

use crate::error::Error;
use crate::gram::GramForm;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::SparseVector;

/// A linear subspace of the coordinate space of dimension `ambient_dim`,
/// stored as a list of linearly independent basis vectors. The zero
/// subspace has an empty basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVector>,
}

impl Subspace {
    /// Validating constructor: every index must fit in the ambient space
    /// and the vectors must be linearly independent.
    pub fn new(ambient_dim: usize, basis: Vec<SparseVector>) -> Result<Self, Error> {
        for v in &basis {
            if let Some(max) = v.max_index() {
                if max > ambient_dim {
                    return Err(Error::IndexOutOfRange {
                        index: max,
                        dim: ambient_dim,
                    });
                }
            }
        }
        if !basis.is_empty() {
            let stacked = Matrix::from_sparse_rows(&basis, ambient_dim)?;
            if stacked.rank() != basis.len() {
                return Err(Error::LinearlyDependent);
            }
        }
        Ok(Subspace { ambient_dim, basis })
    }

    /// For callers that guarantee independence structurally (echelon
    /// constructions, kernel bases).
    pub(crate) fn new_unchecked(ambient_dim: usize, basis: Vec<SparseVector>) -> Self {
        Subspace { ambient_dim, basis }
    }

    /// Span of an arbitrary finite set of vectors: the basis is read off
    /// the nonzero rows of the reduced row echelon form, so it is a
    /// canonical basis of the span.
    pub fn from_spanning(ambient_dim: usize, vectors: &[SparseVector]) -> Result<Self, Error> {
        for v in vectors {
            if let Some(max) = v.max_index() {
                if max > ambient_dim {
                    return Err(Error::IndexOutOfRange {
                        index: max,
                        dim: ambient_dim,
                    });
                }
            }
        }
        if vectors.is_empty() || vectors.iter().all(|v| v.is_zero()) {
            return Ok(Subspace::zero(ambient_dim));
        }
        let stacked = Matrix::from_sparse_rows(vectors, ambient_dim)?;
        let (r, pivots) = stacked.rref0();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Ok(Subspace {
            ambient_dim,
            basis,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// The whole coordinate space, with its standard basis.
    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (1..=ambient_dim).map(SparseVector::unit).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v` with respect to this basis, or `None` when `v`
    /// lies outside the span.
    pub fn coordinates_of(&self, v: &SparseVector) -> Option<Vec<Scalar>> {
        if let Some(max) = v.max_index() {
            if max > self.ambient_dim {
                return None;
            }
        }
        if self.basis.is_empty() {
            return v.is_zero().then(Vec::new);
        }
        let k = self.basis.len();
        let mut aug = Matrix::zeros(self.ambient_dim, k + 1);
        for (j, b) in self.basis.iter().enumerate() {
            for (i, val) in b.iter() {
                aug.set(i - 1, j, val.clone());
            }
        }
        for (i, val) in v.iter() {
            aug.set(i - 1, k, val.clone());
        }
        let (r, pivots) = aug.rref0();
        if pivots.contains(&k) {
            return None;
        }
        // The basis columns are independent, so they are all pivots and
        // row i of the reduced system carries the coefficient of basis
        // vector i.
        debug_assert_eq!(pivots.len(), k);
        Some((0..k).map(|i| r.get(i, k).clone()).collect())
    }

    pub fn contains_vector(&self, v: &SparseVector) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Equality as subspaces: mutual containment, never basis comparison.
    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other) && other.contains_subspace(self)
    }

    /// Sum of the two spans.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient_dim, &all)
    }
}

/// Orthogonal complement of `u` inside `h` with respect to `g`:
/// all vectors `v` in `h` with `g(w, v) = 0` for every `w` in `u`.
///
/// Requires `u` to be contained in `h` and both to live in the space the
/// gram form is defined on. When `g` is positive definite (which the
/// `GramForm` type certifies) the result is a true complement of `u`
/// inside `h`.
pub fn orthogonal_complement(
    u: &Subspace,
    h: &Subspace,
    g: &GramForm,
) -> Result<Subspace, Error> {
    if u.ambient_dim() != g.dim() || h.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subspaces of ambient {} and {} against a form on dimension {}",
            u.ambient_dim(),
            h.ambient_dim(),
            g.dim()
        )));
    }
    if !h.contains_subspace(u) {
        return Err(Error::NotContained);
    }
    if h.is_zero() || u.is_zero() {
        return Ok(h.clone());
    }
    // v = sum_a c_a h_a is orthogonal to every u_b exactly when
    // sum_a c_a g(h_a, u_b) = 0 for all b, by conjugate symmetry.
    let pairing = Matrix::from_fn(u.dim(), h.dim(), |b, a| {
        g.inner_product(&h.basis()[a], &u.basis()[b])
            .expect("indices fit the form dimension")
    });
    let coeff_kernel = pairing.kernel_basis();
    let basis = coeff_kernel
        .basis()
        .iter()
        .map(|c| {
            let terms: Vec<(&Scalar, &SparseVector)> = c
                .iter()
                .map(|(a, coeff)| (coeff, &h.basis()[a - 1]))
                .collect();
            SparseVector::linear_combination(terms)
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(basis.len(), h.dim() - u.dim());
    Subspace::new(h.ambient_dim(), basis)
}
