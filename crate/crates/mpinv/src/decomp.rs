//! Invariant direct-sum decompositions of an endomorphism and the
//! blockwise reflexive generalized inverse they induce.
//!
//! Given a direct sum decomposition of the whole space into subspaces
//! each mapped into itself by `A`, restricting `A` to each part and
//! inverting the restrictions independently yields a reflexive
//! generalized inverse of `A`. It equals the Moore-Penrose inverse
//! exactly when the per-part orthogonal complements of the images (and of
//! the kernels) are orthogonal to the images (kernels) of all the other
//! parts; `char_conditions` decides those two inclusions.

use crate::error::Error;
use crate::gram::GramForm;
use crate::matrix::Matrix;
use crate::pinv::mp_inverse_geometric;
use crate::scalar::Scalar;
use crate::subspace::{orthogonal_complement, Subspace};
use crate::vector::SparseVector;

/// A direct-sum decomposition of the coordinate space: parts are
/// subspaces whose dimensions add up to the ambient dimension and whose
/// concatenated bases have full rank.
#[derive(Clone, Debug)]
pub struct InvariantDecomposition {
    ambient_dim: usize,
    parts: Vec<Subspace>,
}

impl InvariantDecomposition {
    pub fn new(ambient_dim: usize, parts: Vec<Subspace>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::NotDirectSum("no parts given".to_string()));
        }
        for part in &parts {
            if part.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "part lives in dimension {}, decomposition in {}",
                    part.ambient_dim(),
                    ambient_dim
                )));
            }
            if part.dim() == 0 {
                return Err(Error::NotDirectSum("a part is the zero subspace".to_string()));
            }
        }
        let total: usize = parts.iter().map(|p| p.dim()).sum();
        if total != ambient_dim {
            return Err(Error::NotDirectSum(format!(
                "part dimensions sum to {total}, ambient dimension is {ambient_dim}"
            )));
        }
        let stacked: Vec<SparseVector> = parts
            .iter()
            .flat_map(|p| p.basis().iter().cloned())
            .collect();
        if Matrix::from_sparse_rows(&stacked, ambient_dim)?.rank() != ambient_dim {
            return Err(Error::NotDirectSum(
                "concatenated part bases do not have full rank".to_string(),
            ));
        }
        Ok(InvariantDecomposition { ambient_dim, parts })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn parts(&self) -> &[Subspace] {
        &self.parts
    }

    /// Change-of-basis matrix whose columns are the concatenated part
    /// bases; invertible by the direct-sum invariant.
    pub fn basis_matrix(&self) -> Matrix {
        let columns: Vec<SparseVector> = self
            .parts
            .iter()
            .flat_map(|p| p.basis().iter().cloned())
            .collect();
        Matrix::from_sparse_columns(&columns, self.ambient_dim)
            .expect("decomposition parts are nonempty")
    }
}

fn require_endomorphism(a: &Matrix, d: &InvariantDecomposition) -> Result<(), Error> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() != d.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against a decomposition of dimension {}",
            a.rows(),
            a.cols(),
            d.ambient_dim()
        )));
    }
    Ok(())
}

/// True iff every part is mapped into itself by `A`.
pub fn check_invariance(a: &Matrix, d: &InvariantDecomposition) -> Result<bool, Error> {
    require_endomorphism(a, d)?;
    for part in d.parts() {
        for h in part.basis() {
            if !part.contains_vector(&a.apply(h)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The restriction of `A` to a part, written in that part's basis:
/// column `b` holds the coordinates of `A` applied to basis vector `b`.
/// Fails with `NotInvariant` when an image leaves the part.
fn restriction_matrix(a: &Matrix, part: &Subspace) -> Result<Matrix, Error> {
    let k = part.dim();
    let mut m = Matrix::zeros(k, k);
    for (b, h) in part.basis().iter().enumerate() {
        let image = a.apply(h)?;
        let coords = part.coordinates_of(&image).ok_or(Error::NotInvariant)?;
        for (row, c) in coords.into_iter().enumerate() {
            m.set(row, b, c);
        }
    }
    Ok(m)
}

/// Images of `A` restricted to each part, as subspaces of the ambient
/// space, together with the kernels of the restrictions.
fn restriction_images_kernels(
    a: &Matrix,
    d: &InvariantDecomposition,
) -> Result<(Vec<Subspace>, Vec<Subspace>), Error> {
    let mut images = Vec::with_capacity(d.parts().len());
    let mut kernels = Vec::with_capacity(d.parts().len());
    for part in d.parts() {
        let m = restriction_matrix(a, part)?;
        let image_vectors: Vec<SparseVector> = part
            .basis()
            .iter()
            .map(|h| a.apply(h))
            .collect::<Result<_, _>>()?;
        images.push(Subspace::from_spanning(d.ambient_dim(), &image_vectors)?);
        // Kernel coefficient vectors are over the part basis; map them
        // back into ambient coordinates.
        let kernel_vectors: Vec<SparseVector> = m
            .kernel_basis()
            .basis()
            .iter()
            .map(|c| {
                let terms: Vec<(&Scalar, &SparseVector)> = c
                    .iter()
                    .map(|(idx, coeff)| (coeff, &part.basis()[idx - 1]))
                    .collect();
                SparseVector::linear_combination(terms)
            })
            .collect();
        kernels.push(Subspace::from_spanning(d.ambient_dim(), &kernel_vectors)?);
    }
    Ok((images, kernels))
}

/// The blockwise reflexive generalized inverse induced by an invariant
/// decomposition: each restriction is Moore-Penrose-inverted inside its
/// own part, under the form restricted to that part, and the pieces are
/// conjugated back into ambient coordinates.
pub fn blockwise_rgi(
    a: &Matrix,
    d: &InvariantDecomposition,
    g: &GramForm,
) -> Result<Matrix, Error> {
    require_endomorphism(a, d)?;
    if g.dim() != d.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "form on dimension {}, decomposition on {}",
            g.dim(),
            d.ambient_dim()
        )));
    }
    let mut inverted_blocks = Vec::with_capacity(d.parts().len());
    for part in d.parts() {
        let m = restriction_matrix(a, part)?;
        let g_part = g.restrict(part.basis())?;
        inverted_blocks.push(mp_inverse_geometric(&m, &g_part, &g_part)?);
    }
    let t = d.basis_matrix();
    let block = Matrix::block_diagonal(&inverted_blocks)?;
    Ok(&(&t * &block) * &t.inverse()?)
}

/// The two orthogonality conditions that characterize when the blockwise
/// inverse is the Moore-Penrose inverse: for every part, the complement
/// of the restricted image (kernel) inside its part must be orthogonal to
/// the images (kernels) of all other parts.
pub fn char_conditions(
    a: &Matrix,
    d: &InvariantDecomposition,
    g: &GramForm,
) -> Result<(bool, bool), Error> {
    require_endomorphism(a, d)?;
    let (images, kernels) = restriction_images_kernels(a, d)?;
    let image_condition = relative_complements_orthogonal(d, &images, g)?;
    let kernel_condition = relative_complements_orthogonal(d, &kernels, g)?;
    Ok((image_condition, kernel_condition))
}

/// For each part `i` with enclosed subspace `U_i`, tests whether the
/// complement of `U_i` inside part `i` is orthogonal to every `U_j` with
/// `j` different from `i`. Inclusion in the big complement is decided by
/// these pairings being zero, never by comparing bases.
fn relative_complements_orthogonal(
    d: &InvariantDecomposition,
    enclosed: &[Subspace],
    g: &GramForm,
) -> Result<bool, Error> {
    for (i, part) in d.parts().iter().enumerate() {
        let complement = orthogonal_complement(&enclosed[i], part, g)?;
        for (j, other) in enclosed.iter().enumerate() {
            if i == j {
                continue;
            }
            for u in other.basis() {
                for x in complement.basis() {
                    if !g.inner_product(u, x)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The direct sums of the per-part complements of images and kernels.
/// The first summand complements the image of `A` in the whole space,
/// the second complements the kernel; both facts are asserted.
pub fn decomposition_complements(
    a: &Matrix,
    d: &InvariantDecomposition,
    g: &GramForm,
) -> Result<(Subspace, Subspace), Error> {
    require_endomorphism(a, d)?;
    let (images, kernels) = restriction_images_kernels(a, d)?;
    let mut image_complement_basis = Vec::new();
    let mut kernel_complement_basis = Vec::new();
    for (i, part) in d.parts().iter().enumerate() {
        image_complement_basis
            .extend(orthogonal_complement(&images[i], part, g)?.basis().iter().cloned());
        kernel_complement_basis
            .extend(orthogonal_complement(&kernels[i], part, g)?.basis().iter().cloned());
    }
    let h_perp = Subspace::new(d.ambient_dim(), image_complement_basis)?;
    let h_tilde_perp = Subspace::new(d.ambient_dim(), kernel_complement_basis)?;
    let image = a.image_basis();
    let kernel = a.kernel_basis();
    assert_eq!(
        image.dim() + h_perp.dim(),
        d.ambient_dim(),
        "image and its blockwise complement must fill the space"
    );
    assert_eq!(
        image.sum(&h_perp)?.dim(),
        d.ambient_dim(),
        "image and its blockwise complement must be independent"
    );
    assert_eq!(
        kernel.dim() + h_tilde_perp.dim(),
        d.ambient_dim(),
        "kernel and its blockwise complement must fill the space"
    );
    assert_eq!(
        kernel.sum(&h_tilde_perp)?.dim(),
        d.ambient_dim(),
        "kernel and its blockwise complement must be independent"
    );
    Ok((h_perp, h_tilde_perp))
}
