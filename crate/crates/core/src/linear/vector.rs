use std::fmt;

use serde::{Deserialize, Serialize};

use super::Scalar;

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SparseVec(Vec<(usize, Scalar)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        SparseVec(vec![(i, Scalar::one())])
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec(out)
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        )
    }

    pub fn from_ints(values: &[i64]) -> Self {
        SparseVec(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(i, v)| (i, Scalar::from_int(*v)))
                .collect(),
        )
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, v) in &self.0 {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(i, v)| (*i, v))
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.0.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.0.binary_search_by_key(&i, |p| p.0) {
            Ok(pos) => self.0[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, v)| (*i, v * c)).collect())
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec(out)
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Scalar::one(), other)
    }

    pub fn neg(&self) -> SparseVec {
        self.scale(&-Scalar::one())
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Keeps only entries whose index passes `keep`, renumbered by `map`.
    pub fn select(&self, map: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_pairs(
            self.0
                .iter()
                .filter_map(|(i, v)| map(*i).map(|j| (j, v.clone())))
                .collect(),
        )
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter().map(|(i, v)| (i, v))).finish()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        SparseVec::from_pairs(iter.into_iter().collect())
    }
}
