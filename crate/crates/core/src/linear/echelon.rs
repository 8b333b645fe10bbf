//! Incremental reduced row echelon form over the rationals.
//!
//! Rows are inserted one at a time. Each stored row has a leading `1` in its
//! pivot column, no entries left of it, and zeros in every other pivot
//! column. Reduction of an arbitrary vector is therefore a single pass over
//! its pivot-column entries.

use std::collections::BTreeMap;

use super::{Scalar, SparseVec};

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn from_vectors<'a>(ncols: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(ncols);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.pivots.iter().map(|(c, r)| (*c, r))
    }

    /// Normal form of `v` modulo the row space: the result is supported on
    /// free columns only.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (c, x) in v.iter() {
            if let Some(row) = self.pivots.get(&c) {
                out = out.axpy(&-x, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.max_index().map_or(true, |m| m < self.ncols));
        let r = self.reduce(v);
        let Some((lead, lv)) = r.leading() else {
            return false;
        };
        let r = r.scale(&lv.recip());
        for row in self.pivots.values_mut() {
            let x = row.get(lead);
            if !x.is_zero() {
                *row = row.axpy(&-x, &r);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    /// Basis of the orthogonal null space `{x : row . x = 0 for all rows}`,
    /// one vector per free column, each with a `1` at its free column and
    /// `0` at every other free column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let free = self.free_cols();
        let mut per_free: BTreeMap<usize, Vec<(usize, Scalar)>> =
            free.iter().map(|f| (*f, vec![(*f, Scalar::one())])).collect();
        for (pc, row) in &self.pivots {
            for (c, x) in row.iter() {
                if c != *pc {
                    per_free.get_mut(&c).expect("non-pivot entry").push((*pc, -x));
                }
            }
        }
        free.iter()
            .map(|f| SparseVec::from_pairs(per_free.remove(f).unwrap_or_default()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = [
            SparseVec::from_ints(&[1, 2, 3]),
            SparseVec::from_ints(&[2, 4, 6]),
            SparseVec::from_ints(&[0, 1, 1]),
        ];
        let e = Echelon::from_vectors(3, rows.iter());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&SparseVec::from_ints(&[1, 3, 4])));
        assert!(!e.contains(&SparseVec::from_ints(&[0, 0, 1])));
    }

    #[test]
    fn null_space_is_orthogonal() {
        let rows = [SparseVec::from_ints(&[1, 2, 0, -1]), SparseVec::from_ints(&[0, 1, 1, 1])];
        let e = Echelon::from_vectors(4, rows.iter());
        let ns = e.null_space();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert!(r.dot(v).is_zero());
            }
        }
    }
}
