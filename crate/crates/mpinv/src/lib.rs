//! Exact Moore-Penrose inverses over the Gaussian rationals.
//!
//! Everything in this crate is computed with unbounded exact arithmetic:
//! scalars are complex numbers whose real and imaginary parts are
//! arbitrary-precision rationals, so every equality in the API is literal
//! equality, never a tolerance check.
//!
//! The crate covers four layers, each built on the previous one:
//!
//! * dense matrices with reduced row echelon form, kernel and image bases,
//!   and Moore-Penrose inverses computed two independent ways (an algebraic
//!   route through a full-rank factorization and a geometric route through
//!   orthogonal complements), valid for any positive definite Hermitian
//!   inner product on either side;
//! * invariant direct-sum decompositions of an endomorphism, the reflexive
//!   generalized inverse assembled blockwise from such a decomposition, and
//!   the orthogonality conditions that characterize when that blockwise
//!   inverse is the Moore-Penrose inverse;
//! * block operators on a countably infinite coordinate space, given by
//!   finitely many square head blocks followed by one square block repeated
//!   forever down the diagonal, with blockwise Moore-Penrose inversion,
//!   finite truncation, and a finite-potency test;
//! * an exact solver for the infinite linear systems defined by such
//!   operators, reporting consistency, the unique solution of minimal norm
//!   among least-squares solutions, the exact residual, and a description
//!   of the kernel.

pub mod blockop;
pub mod decomp;
pub mod error;
pub mod gram;
pub mod matrix;
pub mod pinv;
pub mod scalar;
pub mod solve;
pub mod subspace;
pub mod textio;
pub mod vector;

pub use blockop::{BlockDescription, BlockOperator, BlockPart};
pub use decomp::{
    blockwise_rgi, char_conditions, check_invariance, decomposition_complements,
    InvariantDecomposition,
};
pub use error::{Error, ParseError};
pub use gram::GramForm;
pub use matrix::Matrix;
pub use pinv::{
    adjoint, full_rank_factorization, mp_inverse, mp_inverse_geometric, verify_penrose,
    verify_reflexive, PenroseChecks,
};
pub use scalar::{Rational, Scalar};
pub use solve::{is_consistent, min_least_norm_solution, residual_norm_squared, solve, SolveReport};
pub use subspace::{orthogonal_complement, Subspace};
pub use vector::SparseVector;
