//! Shared fixtures and deterministic random generators for the
//! integration tests.

#![allow(dead_code)]

use mpinv::{
    BlockOperator, GramForm, InvariantDecomposition, Matrix, Scalar, SparseVector, Subspace,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

pub fn v(pairs: &[(usize, &str)]) -> SparseVector {
    SparseVector::from_entries(pairs.iter().map(|(i, t)| (*i, s(t))).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The running infinite example: a 10-dimensional head block followed by
/// one 5x5 block repeated forever.
pub fn phi() -> BlockOperator {
    BlockOperator::new(vec![phi_head()], phi_tail()).unwrap()
}

pub fn phi_head() -> Matrix {
    Matrix::from_int_rows(&[
        &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        &[1, 3, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, -1, -1, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 2, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, -1, 0, -1],
        &[1, 0, 0, 0, 2, 3, 0, 0, 1, 5],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, 2, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    ])
}

pub fn phi_tail() -> Matrix {
    Matrix::from_int_rows(&[
        &[0, 0, -1, 0, -1],
        &[3, 0, 0, 1, 5],
        &[0, 0, 0, 0, 0],
        &[0, 0, 2, 0, 0],
        &[0, 0, 0, 1, 0],
    ])
}

/// Moore-Penrose inverse of the head block, certified by the four
/// Penrose identities. Row 7 vanishes identically: column 7 of the head
/// block is zero, so the seventh coordinate is orthogonal to the image
/// of the inverse.
pub fn phi_head_dagger() -> Matrix {
    let row = |cells: [&str; 10]| cells.iter().map(|c| s(c)).collect::<Vec<_>>();
    Matrix::from_rows(vec![
        row(["6", "-2", "6", "0", "3", "0", "0", "0", "0", "0"]),
        row(["-2", "1", "-2", "0", "-1", "0", "0", "0", "0", "0"]),
        row(["0", "0", "0", "1", "0", "0", "0", "0", "0", "0"]),
        row(["3", "-1", "2", "0", "1", "0", "0", "0", "0", "0"]),
        row(["-3", "1", "-3", "0", "-1", "0", "0", "0", "0", "0"]),
        row(["0", "0", "0", "0", "-1/3", "5/3", "1/3", "0", "5/6", "-1/3"]),
        row(["0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]),
        row(["0", "0", "0", "0", "0", "0", "0", "0", "1/2", "0"]),
        row(["0", "0", "0", "0", "0", "0", "0", "0", "0", "1"]),
        row(["0", "0", "0", "0", "0", "-1", "0", "0", "-1/2", "0"]),
    ])
    .unwrap()
}

/// Moore-Penrose inverse of the tail block, certified by the four
/// Penrose identities.
pub fn phi_tail_dagger() -> Matrix {
    let row = |cells: [&str; 5]| cells.iter().map(|c| s(c)).collect::<Vec<_>>();
    Matrix::from_rows(vec![
        row(["5/3", "1/3", "0", "5/6", "-1/3"]),
        row(["0", "0", "0", "0", "0"]),
        row(["0", "0", "0", "1/2", "0"]),
        row(["0", "0", "0", "0", "1"]),
        row(["-1", "0", "0", "-1/2", "0"]),
    ])
    .unwrap()
}

/// The 4x4 endomorphism used throughout the finite-dimensional tests.
/// Columns are the images of the basis vectors: f(v1) = e1, f(v2) = e1,
/// f(v3) = -2 e1, f(v4) = e1 + e2 + e3.
pub fn counterexample_map() -> Matrix {
    Matrix::from_int_rows(&[
        &[1, 1, -2, 1],
        &[0, 0, 0, 1],
        &[0, 0, 0, 1],
        &[0, 0, 0, 0],
    ])
}

/// Invariant two-part split of the counterexample: spans of {e1, e2} and
/// {e1 + e2 + e3, e4}.
pub fn counterexample_split() -> InvariantDecomposition {
    let h1 = Subspace::new(4, vec![v(&[(1, "1")]), v(&[(2, "1")])]).unwrap();
    let h2 = Subspace::new(
        4,
        vec![v(&[(1, "1"), (2, "1"), (3, "1")]), v(&[(4, "1")])],
    )
    .unwrap();
    InvariantDecomposition::new(4, vec![h1, h2]).unwrap()
}

/// Blockwise generalized inverse induced by `counterexample_split`,
/// certified reflexive but not Moore-Penrose.
pub fn counterexample_rgi() -> Matrix {
    let row = |cells: [&str; 4]| cells.iter().map(|c| s(c)).collect::<Vec<_>>();
    Matrix::from_rows(vec![
        row(["1/2", "0", "-1/2", "0"]),
        row(["1/2", "0", "-1/2", "0"]),
        row(["0", "0", "0", "0"]),
        row(["0", "0", "1", "0"]),
    ])
    .unwrap()
}

/// Moore-Penrose inverse of `counterexample_map`.
pub fn counterexample_mp() -> Matrix {
    let row = |cells: [&str; 4]| cells.iter().map(|c| s(c)).collect::<Vec<_>>();
    Matrix::from_rows(vec![
        row(["1/6", "-1/12", "-1/12", "0"]),
        row(["1/6", "-1/12", "-1/12", "0"]),
        row(["-1/3", "1/6", "1/6", "0"]),
        row(["0", "1/2", "1/2", "0"]),
    ])
    .unwrap()
}

/// Small rational, optionally with an imaginary part. Numerators stay
/// tiny so products of several factors remain cheap.
pub fn random_scalar(rng: &mut ChaCha8Rng, complex: bool) -> Scalar {
    let part = |r: &mut ChaCha8Rng| {
        let num: i64 = r.gen_range(-4..=4);
        let den: i64 = r.gen_range(1..=3);
        (num, den)
    };
    let (rn, rd) = part(rng);
    if complex && rng.gen_bool(0.5) {
        let (in_, id) = part(rng);
        Scalar::complex_ratio(rn, rd, in_, id)
    } else {
        Scalar::ratio(rn, rd)
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, complex: bool) -> Matrix {
    let data: Vec<Vec<Scalar>> = (0..rows)
        .map(|_| (0..cols).map(|_| random_scalar(rng, complex)).collect())
        .collect();
    Matrix::from_rows(data).unwrap()
}

/// Matrix of the requested exact rank, built as a product of full-rank
/// factors and re-drawn until the rank is exact.
pub fn random_matrix_of_rank(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    rank: usize,
    complex: bool,
) -> Matrix {
    assert!(rank <= rows.min(cols));
    if rank == 0 {
        return Matrix::zeros(rows, cols);
    }
    loop {
        let l = random_matrix(rng, rows, rank, complex);
        let r = random_matrix(rng, rank, cols, complex);
        let a = l.checked_mul(&r).unwrap();
        if a.rank() == rank {
            return a;
        }
    }
}

/// Invertible matrix with small integer entries.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_rows(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Scalar::from_int(rng.gen_range(-3..=3)))
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        if m.rank() == n {
            return m;
        }
    }
}

/// Matrix whose columns are orthonormal under the standard inner
/// product: a signed permutation stirred by a few rational plane
/// rotations, with optional unit imaginary factors.
pub fn random_orthonormal(rng: &mut ChaCha8Rng, n: usize, complex: bool) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    for (j, &i) in perm.iter().enumerate() {
        let mut unit = if rng.gen_bool(0.5) { s("1") } else { s("-1") };
        if complex && rng.gen_bool(0.3) {
            unit = &unit * &s("i");
        }
        rows[i][j] = unit;
    }
    let mut m = Matrix::from_rows(rows).unwrap();
    if n >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n);
            while b == a {
                b = rng.gen_range(0..n);
            }
            let (c, d) = if rng.gen_bool(0.5) {
                (s("3/5"), s("4/5"))
            } else {
                (s("5/13"), s("12/13"))
            };
            let mut rot = vec![vec![Scalar::zero(); n]; n];
            for (k, row) in rot.iter_mut().enumerate() {
                row[k] = s("1");
            }
            rot[a][a] = c.clone();
            rot[b][b] = c;
            rot[a][b] = -&d;
            rot[b][a] = d;
            m = m.checked_mul(&Matrix::from_rows(rot).unwrap()).unwrap();
        }
    }
    m
}

/// Splits `n` into at least two positive parts when possible.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![1];
    }
    let parts = rng.gen_range(2..=n.min(3));
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    let mut dims = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        dims.push(c - prev);
        prev = c;
    }
    dims.push(n - prev);
    dims
}

/// Endomorphism together with an invariant direct-sum split, built by
/// conjugating a block-diagonal matrix. With `orthogonal` set the parts
/// are pairwise orthogonal under the standard inner product.
pub fn random_invariant_pair(
    rng: &mut ChaCha8Rng,
    n: usize,
    orthogonal: bool,
    complex: bool,
) -> (Matrix, InvariantDecomposition) {
    let dims = random_partition(rng, n);
    let p = if orthogonal {
        random_orthonormal(rng, n, complex)
    } else {
        random_invertible(rng, n)
    };
    let blocks: Vec<Matrix> = dims
        .iter()
        .map(|&d| {
            let rank = rng.gen_range(0..=d);
            random_matrix_of_rank(rng, d, d, rank, complex)
        })
        .collect();
    let a = p
        .checked_mul(&Matrix::block_diagonal(&blocks).unwrap())
        .unwrap()
        .checked_mul(&p.inverse().unwrap())
        .unwrap();
    let mut parts = Vec::with_capacity(dims.len());
    let mut offset = 0;
    for &d in &dims {
        let basis: Vec<SparseVector> = (offset..offset + d).map(|j| p.column(j)).collect();
        parts.push(Subspace::new(n, basis).unwrap());
        offset += d;
    }
    (a, InvariantDecomposition::new(n, parts).unwrap())
}

/// Random block operator. `min_heads` bounds the head count from below;
/// `force_tail_kernel` zeroes one tail column so the kernel is never
/// trivial.
pub fn random_block_operator(
    rng: &mut ChaCha8Rng,
    min_heads: usize,
    force_tail_kernel: bool,
    complex: bool,
) -> BlockOperator {
    let n_heads = rng.gen_range(min_heads..=2.max(min_heads));
    let heads: Vec<Matrix> = (0..n_heads)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let rank = rng.gen_range(0..=d);
            random_matrix_of_rank(rng, d, d, rank, complex)
        })
        .collect();
    let t = rng.gen_range(1..=3);
    let mut tail = random_matrix(rng, t, t, complex);
    if force_tail_kernel {
        let dead = rng.gen_range(0..t);
        let rows: Vec<Vec<Scalar>> = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| {
                        if j == dead {
                            Scalar::zero()
                        } else {
                            tail.get(i, j).clone()
                        }
                    })
                    .collect()
            })
            .collect();
        tail = Matrix::from_rows(rows).unwrap();
    }
    BlockOperator::new(heads, tail).unwrap()
}

/// Sparse vector with indices drawn from `1..=max_index`.
pub fn random_sparse_vector(
    rng: &mut ChaCha8Rng,
    max_index: usize,
    max_support: usize,
    complex: bool,
) -> SparseVector {
    let support = rng.gen_range(0..=max_support);
    let entries: Vec<(usize, Scalar)> = (0..support)
        .map(|_| (rng.gen_range(1..=max_index), random_scalar(rng, complex)))
        .collect();
    SparseVector::from_entries(entries).unwrap()
}

/// Nonzero vector from the kernel of `op`, combining head kernel vectors
/// and kernel vectors of the first few tail copies. Returns None when
/// every block kernel is trivial.
pub fn random_kernel_vector(rng: &mut ChaCha8Rng, op: &BlockOperator) -> Option<SparseVector> {
    let ker = op.kernel_description();
    let mut pool: Vec<SparseVector> = ker.head_vectors_global();
    for copy in 0..3 {
        pool.extend(ker.tail_vectors_for_copy(copy));
    }
    if pool.is_empty() {
        return None;
    }
    for _ in 0..32 {
        let mut out = SparseVector::zero();
        for b in &pool {
            if rng.gen_bool(0.6) {
                out = out.add(&b.scale(&random_scalar(rng, false)));
            }
        }
        if !out.is_zero() {
            return Some(out);
        }
    }
    Some(pool[0].clone())
}

pub fn std_gram(n: usize) -> GramForm {
    GramForm::identity(n)
}
