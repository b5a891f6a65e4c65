//! Infinite-dimensional endomorphisms with head-plus-periodic-tail block
//! structure.
//!
//! A `BlockOperator` acts on the space of finitely supported sequences:
//! finitely many square head blocks occupy the leading coordinate ranges,
//! and one square tail block repeats forever after them. Each block maps
//! its own coordinate range into itself, and the ranges are spanned by
//! disjoint sets of standard basis vectors, so the blocks are pairwise
//! orthogonal by construction. That makes the blockwise inverse the
//! Moore-Penrose inverse of the whole operator, with no further
//! hypothesis to check at runtime.

use std::fmt;

use crate::error::Error;
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::vector::SparseVector;

/// Block-diagonal operator on finitely supported sequences: head blocks
/// of sizes `d_1, ..., d_m` on the first `d_1 + ... + d_m` coordinates,
/// then a tail block of size `t` repeated on every following range of
/// `t` coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct BlockOperator {
    head_blocks: Vec<Matrix>,
    tail_block: Matrix,
}

/// A subspace attached to one head block, carried with the coordinate
/// offset of that block.
#[derive(Clone, Debug)]
pub struct BlockPart {
    pub offset: usize,
    pub space: Subspace,
}

/// Per-block subspace data for a block operator: one entry per head
/// block in local coordinates plus the offset, and a single tail entry
/// valid for every tail copy. The vector for tail copy `k` (counted from
/// 0) is the local vector shifted by `head_len + k * tail_period`.
#[derive(Clone, Debug)]
pub struct BlockDescription {
    pub head_len: usize,
    pub tail_period: usize,
    pub heads: Vec<BlockPart>,
    pub tail: Subspace,
}

impl BlockDescription {
    /// All head basis vectors, translated to absolute coordinates.
    pub fn head_vectors_global(&self) -> Vec<SparseVector> {
        self.heads
            .iter()
            .flat_map(|part| {
                part.space
                    .basis()
                    .iter()
                    .map(|v| v.shift(part.offset))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Basis vectors of tail copy `k`, translated to absolute
    /// coordinates.
    pub fn tail_vectors_for_copy(&self, k: usize) -> Vec<SparseVector> {
        let offset = self.head_len + k * self.tail_period;
        self.tail.basis().iter().map(|v| v.shift(offset)).collect()
    }

    /// Total dimension contributed by the head blocks.
    pub fn head_dim(&self) -> usize {
        self.heads.iter().map(|p| p.space.dim()).sum()
    }

    /// Dimension contributed by each tail copy.
    pub fn tail_dim_per_copy(&self) -> usize {
        self.tail.dim()
    }
}

impl BlockOperator {
    /// Builds an operator from square head blocks and a square tail
    /// block.
    pub fn new(head_blocks: Vec<Matrix>, tail_block: Matrix) -> Result<Self, Error> {
        for b in head_blocks.iter().chain(std::iter::once(&tail_block)) {
            if !b.is_square() {
                return Err(Error::NotSquare {
                    rows: b.rows(),
                    cols: b.cols(),
                });
            }
        }
        Ok(BlockOperator {
            head_blocks,
            tail_block,
        })
    }

    pub fn head_blocks(&self) -> &[Matrix] {
        &self.head_blocks
    }

    pub fn tail_block(&self) -> &Matrix {
        &self.tail_block
    }

    pub fn head_sizes(&self) -> Vec<usize> {
        self.head_blocks.iter().map(|b| b.rows()).collect()
    }

    /// Number of coordinates covered by the head blocks.
    pub fn head_len(&self) -> usize {
        self.head_blocks.iter().map(|b| b.rows()).sum()
    }

    /// Size of the repeating tail block.
    pub fn tail_period(&self) -> usize {
        self.tail_block.rows()
    }

    /// Coordinate offset of head block `j` (0-based).
    pub fn head_offset(&self, j: usize) -> usize {
        self.head_blocks[..j].iter().map(|b| b.rows()).sum()
    }

    pub fn same_geometry(&self, other: &BlockOperator) -> bool {
        self.head_sizes() == other.head_sizes() && self.tail_period() == other.tail_period()
    }

    /// The operator applied to a finitely supported vector. Only the
    /// blocks whose coordinate ranges meet the support of `x` engage, so
    /// the result is again finitely supported.
    pub fn apply(&self, x: &SparseVector) -> SparseVector {
        let Some(max) = x.max_index() else {
            return SparseVector::zero();
        };
        let mut out = SparseVector::zero();
        let mut offset = 0;
        for block in &self.head_blocks {
            let d = block.rows();
            if offset >= max {
                break;
            }
            let seg = x.slice(offset + 1, d);
            if !seg.is_zero() {
                let image = block.apply(&seg).expect("slice fits the block");
                out = out.add(&image.shift(offset));
            }
            offset += d;
        }
        let head_len = self.head_len();
        if max > head_len {
            let t = self.tail_period();
            let copies = (max - head_len).div_ceil(t);
            for k in 0..copies {
                let off = head_len + k * t;
                let seg = x.slice(off + 1, t);
                if !seg.is_zero() {
                    let image = self.tail_block.apply(&seg).expect("slice fits the block");
                    out = out.add(&image.shift(off));
                }
            }
        }
        out
    }

    /// Moore-Penrose inverse, taken block by block. Because the blocks
    /// act on pairwise orthogonal coordinate ranges of an orthonormal
    /// basis, the blockwise inverse satisfies all four Penrose identities
    /// for the whole operator.
    pub fn mp_inverse(&self) -> BlockOperator {
        BlockOperator {
            head_blocks: self
                .head_blocks
                .iter()
                .map(crate::pinv::mp_inverse)
                .collect(),
            tail_block: crate::pinv::mp_inverse(&self.tail_block),
        }
    }

    /// Blockwise composition `self` after `other`. Both operands must
    /// carve the coordinate space identically; there is no re-blocking.
    pub fn compose(&self, other: &BlockOperator) -> Result<BlockOperator, Error> {
        if !self.same_geometry(other) {
            return Err(Error::GeometryMismatch(format!(
                "head sizes {:?} / tail {} vs head sizes {:?} / tail {}",
                self.head_sizes(),
                self.tail_period(),
                other.head_sizes(),
                other.tail_period()
            )));
        }
        let head_blocks = self
            .head_blocks
            .iter()
            .zip(&other.head_blocks)
            .map(|(a, b)| a.checked_mul(b))
            .collect::<Result<_, _>>()?;
        Ok(BlockOperator {
            head_blocks,
            tail_block: self.tail_block.checked_mul(&other.tail_block)?,
        })
    }

    /// Dense matrix of the head blocks plus the first `tail_copies` tail
    /// copies. Fails only in the degenerate case of no head blocks and
    /// zero copies, where the truncation would be a 0x0 matrix.
    pub fn truncate(&self, tail_copies: usize) -> Result<Matrix, Error> {
        let mut blocks: Vec<Matrix> = self.head_blocks.clone();
        blocks.extend(std::iter::repeat_n(self.tail_block.clone(), tail_copies));
        Matrix::block_diagonal(&blocks)
    }

    /// True iff arbitrarily high powers of the operator have
    /// finite-dimensional range. The head contributes finitely many
    /// dimensions no matter what, and the tail repeats forever, so this
    /// holds exactly when the tail block is nilpotent; its nilpotency
    /// index is bounded by its size.
    pub fn is_finite_potent(&self) -> bool {
        let t = self.tail_period();
        self.tail_block
            .pow(t)
            .expect("tail block is square")
            .is_zero()
    }

    /// Kernels of all blocks: per head block in local coordinates with
    /// its offset, and the tail kernel once, valid for every copy by
    /// index translation.
    pub fn kernel_description(&self) -> BlockDescription {
        self.describe(Matrix::kernel_basis)
    }

    /// Images of all blocks, in the same per-block form as
    /// `kernel_description`.
    pub fn image_description(&self) -> BlockDescription {
        self.describe(Matrix::image_basis)
    }

    fn describe(&self, f: impl Fn(&Matrix) -> Subspace) -> BlockDescription {
        let heads = self
            .head_blocks
            .iter()
            .enumerate()
            .map(|(j, b)| BlockPart {
                offset: self.head_offset(j),
                space: f(b),
            })
            .collect();
        BlockDescription {
            head_len: self.head_len(),
            tail_period: self.tail_period(),
            heads,
            tail: f(&self.tail_block),
        }
    }
}

impl fmt::Debug for BlockOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "block operator, head sizes {:?}, tail period {}:",
            self.head_sizes(),
            self.tail_period()
        )?;
        for (j, b) in self.head_blocks.iter().enumerate() {
            writeln!(f, "head block {j}:")?;
            write!(f, "{b}")?;
        }
        writeln!(f, "tail block:")?;
        write!(f, "{}", self.tail_block)
    }
}
