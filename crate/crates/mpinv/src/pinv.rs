//! Moore-Penrose inverses of finite matrices, computed two independent
//! ways, together with the adjoint and the certification predicates.
//!
//! The algebraic route goes through a full-rank factorization; the
//! geometric route inverts the map on the orthogonal complement of its
//! kernel and kills the orthogonal complement of its image. The two are
//! kept separate deliberately: each serves as an oracle for the other
//! under the standard inner product, and the geometric route is the one
//! that generalizes to arbitrary positive definite Hermitian forms.

use crate::error::Error;
use crate::gram::GramForm;
use crate::matrix::Matrix;
use crate::subspace::{orthogonal_complement, Subspace};

/// Results of the four Penrose identities for a candidate inverse `X` of
/// `A`: `AXA = A`, `XAX = X`, self-adjointness of `AX`, self-adjointness
/// of `XA`. Adjoints are taken with the supplied forms, so the last two
/// depend on the geometry while the first two do not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PenroseChecks {
    pub axa_equals_a: bool,
    pub xax_equals_x: bool,
    pub ax_self_adjoint: bool,
    pub xa_self_adjoint: bool,
}

impl PenroseChecks {
    pub fn all(&self) -> bool {
        self.axa_equals_a && self.xax_equals_x && self.ax_self_adjoint && self.xa_self_adjoint
    }

    pub fn as_tuple(&self) -> (bool, bool, bool, bool) {
        (
            self.axa_equals_a,
            self.xax_equals_x,
            self.ax_self_adjoint,
            self.xa_self_adjoint,
        )
    }
}

/// Adjoint of `A` (a map from the space carrying `g_v` to the space
/// carrying `g_w`) characterized by `g_w(A v, w) = g_v(v, adjoint(A) w)`
/// for all `v`, `w`.
///
/// In coordinates, with forms evaluated as `x^T G conj(y)`, the identity
/// forces `adjoint(A) = conj(gV)^(-1) A^H conj(gW)`, and conjugate
/// symmetry makes `conj(G)` the transpose of `G`. With orthonormal bases
/// on both sides this collapses to the conjugate transpose.
pub fn adjoint(a: &Matrix, g_v: &GramForm, g_w: &GramForm) -> Result<Matrix, Error> {
    if g_v.dim() != a.cols() || g_w.dim() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against forms on dimensions {} and {}",
            a.rows(),
            a.cols(),
            g_w.dim(),
            g_v.dim()
        )));
    }
    let ah = a.conj_transpose();
    if g_v.is_standard() && g_w.is_standard() {
        return Ok(ah);
    }
    let gv_t_inv = g_v.matrix().transpose().inverse()?;
    let gw_t = g_w.matrix().transpose();
    Ok(&(&gv_t_inv * &ah) * &gw_t)
}

/// Writes a nonzero `A` as `F * G` with `F` of full column rank and `G`
/// of full row rank, both of rank equal to the rank of `A`. `F` is the
/// pivot columns of `A`; `G` is the nonzero rows of the reduced row
/// echelon form. The zero matrix is rejected because its rank-0
/// factorization would need empty matrices.
pub fn full_rank_factorization(a: &Matrix) -> Result<(Matrix, Matrix), Error> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let (r, pivots) = a.rref0();
    let rank = pivots.len();
    let f = Matrix::from_fn(a.rows(), rank, |i, j| a.get(i, pivots[j]).clone());
    let g = Matrix::from_fn(rank, a.cols(), |i, j| r.get(i, j).clone());
    Ok((f, g))
}

/// Moore-Penrose inverse under the standard inner products, via the
/// full-rank factorization `A = F G`:
/// `pinv(A) = G^H (G G^H)^(-1) (F^H F)^(-1) F^H`.
/// Both inner factors are invertible because `F` and `G` have full rank.
pub fn mp_inverse(a: &Matrix) -> Matrix {
    if a.is_zero() {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let (f, g) = full_rank_factorization(a).expect("nonzero matrix");
    let fh = f.conj_transpose();
    let gh = g.conj_transpose();
    let ggh_inv = (&g * &gh).inverse().expect("G has full row rank");
    let fhf_inv = (&fh * &f).inverse().expect("F has full column rank");
    &(&gh * &ggh_inv) * &(&fhf_inv * &fh)
}

/// Moore-Penrose inverse with respect to arbitrary positive definite
/// Hermitian forms on the two sides, built geometrically: the result
/// inverts `A` on the orthogonal complement of the kernel and vanishes
/// on the orthogonal complement of the image.
pub fn mp_inverse_geometric(a: &Matrix, g_v: &GramForm, g_w: &GramForm) -> Result<Matrix, Error> {
    if g_v.dim() != a.cols() || g_w.dim() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against forms on dimensions {} and {}",
            a.rows(),
            a.cols(),
            g_w.dim(),
            g_v.dim()
        )));
    }
    let (p, q) = (a.rows(), a.cols());
    let kernel = a.kernel_basis();
    let coimage = orthogonal_complement(&kernel, &Subspace::full(q), g_v)?;
    let rank = coimage.dim();
    if rank == 0 {
        return Ok(Matrix::zeros(q, p));
    }
    let image = a.image_basis();
    let cokernel = orthogonal_complement(&image, &Subspace::full(p), g_w)?;
    // Columns of b: images of the coimage basis, then the cokernel basis.
    // Together they form a basis of the target space, so b is invertible,
    // and the inverse sends A u_k back to the k-th column of u_ext.
    let mut columns = Vec::with_capacity(p);
    for u in coimage.basis() {
        columns.push(a.apply(u)?);
    }
    columns.extend(cokernel.basis().iter().cloned());
    let b = Matrix::from_sparse_columns(&columns, p)?;
    let mut u_ext = Matrix::zeros(q, p);
    for (k, u) in coimage.basis().iter().enumerate() {
        for (i, val) in u.iter() {
            u_ext.set(i - 1, k, val.clone());
        }
    }
    Ok(&u_ext * &b.inverse()?)
}

/// Evaluates the four Penrose identities for `X` as a candidate inverse
/// of `A`, with adjoints taken in the supplied forms.
pub fn verify_penrose(
    a: &Matrix,
    x: &Matrix,
    g_v: &GramForm,
    g_w: &GramForm,
) -> Result<PenroseChecks, Error> {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "candidate inverse is {}x{} for a {}x{} matrix",
            x.rows(),
            x.cols(),
            a.rows(),
            a.cols()
        )));
    }
    if g_v.dim() != a.cols() || g_w.dim() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix against forms on dimensions {} and {}",
            a.rows(),
            a.cols(),
            g_w.dim(),
            g_v.dim()
        )));
    }
    let ax = a.checked_mul(x)?;
    let xa = x.checked_mul(a)?;
    Ok(PenroseChecks {
        axa_equals_a: &ax * a == *a,
        xax_equals_x: &xa * x == *x,
        ax_self_adjoint: adjoint(&ax, g_w, g_w)? == ax,
        xa_self_adjoint: adjoint(&xa, g_v, g_v)? == xa,
    })
}

/// The two reflexivity identities alone: `AXA = A` and `XAX = X`.
pub fn verify_reflexive(a: &Matrix, x: &Matrix) -> Result<bool, Error> {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "candidate inverse is {}x{} for a {}x{} matrix",
            x.rows(),
            x.cols(),
            a.rows(),
            a.cols()
        )));
    }
    let axa = &(a.checked_mul(x)?) * a;
    let xax = &(x.checked_mul(a)?) * x;
    Ok(axa == *a && xax == *x)
}
