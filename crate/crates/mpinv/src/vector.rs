//! Sparse vectors over a countable coordinate space.
//!
//! Coordinates are indexed from 1 and a vector stores only its nonzero
//! entries, sorted by index. Vectors over an infinite index set are
//! exactly the finitely supported ones, so the same type serves both the
//! finite-dimensional and the block-operator layers.

use std::fmt;

use crate::error::Error;
use crate::scalar::{Rational, Scalar};

/// Finitely supported vector with 1-based coordinate indices.
///
/// Invariant: entries are sorted by strictly increasing index and no
/// stored scalar is zero, so equality of vectors is equality of the entry
/// lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero() -> Self {
        SparseVector { entries: Vec::new() }
    }

    /// Standard basis vector at `index` (1-based).
    pub fn unit(index: usize) -> Self {
        SparseVector::from_entries(vec![(index, Scalar::one())])
            .expect("unit index must be at least 1")
    }

    /// Builds a vector from arbitrary (index, value) pairs: duplicates are
    /// summed, zeros are dropped, entries are sorted. The only rejected
    /// input is an index of 0.
    pub fn from_entries(pairs: Vec<(usize, Scalar)>) -> Result<Self, Error> {
        let mut pairs = pairs;
        if pairs.iter().any(|(i, _)| *i == 0) {
            return Err(Error::ZeroIndex);
        }
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &v,
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        Ok(SparseVector { entries })
    }

    pub fn single(index: usize, value: Scalar) -> Result<Self, Error> {
        SparseVector::from_entries(vec![(index, value)])
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero entries.
    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    /// Largest index with a nonzero entry, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    /// Coefficient at `index`, zero when absent.
    pub fn coeff(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        let (va, vb) = (&self.entries, &other.entries);
        let mut entries = Vec::with_capacity(va.len() + vb.len());
        let (mut i, mut j) = (0, 0);
        while i < va.len() && j < vb.len() {
            let (ia, sa) = &va[i];
            let (ib, sb) = &vb[j];
            if ia < ib {
                entries.push((*ia, sa.clone()));
                i += 1;
            } else if ib < ia {
                entries.push((*ib, sb.clone()));
                j += 1;
            } else {
                let sum = sa + sb;
                if !sum.is_zero() {
                    entries.push((*ia, sum));
                }
                i += 1;
                j += 1;
            }
        }
        entries.extend_from_slice(&va[i..]);
        entries.extend_from_slice(&vb[j..]);
        SparseVector { entries }
    }

    pub fn sub(&self, other: &SparseVector) -> SparseVector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparseVector {
        SparseVector {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero();
        }
        SparseVector {
            entries: self.entries.iter().map(|(i, v)| (*i, c * v)).collect(),
        }
    }

    /// Standard inner product, linear in `self` and conjugate-linear in
    /// `other`.
    pub fn inner_product_std(&self, other: &SparseVector) -> Scalar {
        let (va, vb) = (&self.entries, &other.entries);
        let mut total = Scalar::zero();
        let (mut i, mut j) = (0, 0);
        while i < va.len() && j < vb.len() {
            let (ia, sa) = &va[i];
            let (ib, sb) = &vb[j];
            if ia < ib {
                i += 1;
            } else if ib < ia {
                j += 1;
            } else {
                total = &total + &(sa * &sb.conj());
                i += 1;
                j += 1;
            }
        }
        total
    }

    /// Squared norm under the standard inner product; always a nonnegative
    /// rational.
    pub fn norm_sq_std(&self) -> Rational {
        self.entries
            .iter()
            .map(|(_, v)| v.norm_sq())
            .fold(Rational::from_integer(0.into()), |acc, x| acc + x)
    }

    /// Dense coordinates `1..=dim`; errors if the support sticks out.
    pub fn to_dense(&self, dim: usize) -> Result<Vec<Scalar>, Error> {
        if let Some(max) = self.max_index() {
            if max > dim {
                return Err(Error::IndexOutOfRange { index: max, dim });
            }
        }
        let mut dense = vec![Scalar::zero(); dim];
        for (i, v) in &self.entries {
            dense[i - 1] = v.clone();
        }
        Ok(dense)
    }

    pub fn from_dense(coords: &[Scalar]) -> SparseVector {
        SparseVector {
            entries: coords
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i + 1, v.clone()))
                .collect(),
        }
    }

    /// Same vector with every index shifted up by `offset`.
    pub fn shift(&self, offset: usize) -> SparseVector {
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (i + offset, v.clone()))
                .collect(),
        }
    }

    /// The piece of the vector with indices in `start..start+len`
    /// (1-based, inclusive start), reindexed to `1..=len`.
    pub fn slice(&self, start: usize, len: usize) -> SparseVector {
        SparseVector {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < start + len)
                .map(|(i, v)| (i - start + 1, v.clone()))
                .collect(),
        }
    }

    /// Sum of `coeff * vector` terms.
    pub fn linear_combination<'a, I>(terms: I) -> SparseVector
    where
        I: IntoIterator<Item = (&'a Scalar, &'a SparseVector)>,
    {
        terms
            .into_iter()
            .fold(SparseVector::zero(), |acc, (c, v)| acc.add(&v.scale(c)))
    }
}

impl fmt::Display for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, (i, v)) in self.entries.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{i}, \"{v}\"]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
