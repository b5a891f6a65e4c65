//! Exact solving of linear systems over a block operator.
//!
//! For an operator `f` and a finitely supported right-hand side `w`, the
//! candidate solution is always `f†(w)`. When the system is consistent
//! it is the solution of strictly smallest norm; when it is not, it is
//! the least-squares minimizer. The solution set of a consistent system
//! is `f†(w) + Ker f`, and the kernel is reported block by block rather
//! than enumerated.

use crate::blockop::{BlockDescription, BlockOperator};
use crate::scalar::Rational;
use crate::vector::SparseVector;

/// Outcome of solving `f(x) = w`.
///
/// `consistent` holds exactly when `residual_norm_sq` is zero, and
/// `min_solution` is `f†(w)` in either case. The kernel field describes
/// the full solution set of a consistent system as
/// `min_solution + Ker f`.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub consistent: bool,
    pub min_solution: SparseVector,
    pub residual_norm_sq: Rational,
    pub kernel: BlockDescription,
}

/// Squared distance between `op(x)` and `w` in the standard coordinate
/// inner product.
pub fn residual_norm_squared(op: &BlockOperator, x: &SparseVector, w: &SparseVector) -> Rational {
    op.apply(x).sub(w).norm_sq_std()
}

/// Least-squares minimizer of `‖op(x) - w‖`, which for a consistent
/// system is the unique solution of smallest norm. Always lies in the
/// orthogonal complement of the kernel.
pub fn min_least_norm_solution(op: &BlockOperator, w: &SparseVector) -> SparseVector {
    op.mp_inverse().apply(w)
}

/// True iff `w` lies in the image of the operator, decided exactly by
/// checking that the candidate solution reproduces `w`.
pub fn is_consistent(op: &BlockOperator, w: &SparseVector) -> bool {
    op.apply(&min_least_norm_solution(op, w)) == *w
}

/// Solves `op(x) = w`: consistency verdict, minimal solution, exact
/// residual, and the kernel describing the rest of the solution set.
pub fn solve(op: &BlockOperator, w: &SparseVector) -> SolveReport {
    let min_solution = min_least_norm_solution(op, w);
    let residual_norm_sq = op.apply(&min_solution).sub(w).norm_sq_std();
    SolveReport {
        consistent: residual_norm_sq == Rational::from_integer(0.into()),
        min_solution,
        residual_norm_sq,
        kernel: op.kernel_description(),
    }
}
