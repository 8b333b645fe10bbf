use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Echelon, Scalar, SparseVec};
use crate::error::{DkError, Result};

/// Sparse exact matrix, stored column-major with no explicit zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    /// Panics if a column has an entry outside `0..rows`.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            if let Some(m) = c.max_index() {
                assert!(m < rows, "column entry {m} out of bounds for {rows} rows");
            }
        }
        Matrix { rows, cols: columns.len(), columns }
    }

    pub fn from_rows(cols: usize, rows: &[SparseVec]) -> Self {
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter() {
                assert!(c < cols, "row entry {c} out of bounds for {cols} cols");
                pairs[c].push((r, v.clone()));
            }
        }
        Matrix {
            rows: rows.len(),
            cols,
            columns: pairs.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    /// Row-major integer literal; convenient in tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rs: Vec<SparseVec> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                SparseVec::from_ints(r)
            })
            .collect();
        Matrix::from_rows(cols, &rs)
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in entries {
            if *r >= rows || *c >= cols {
                return Err(DkError::Dimension(format!(
                    "entry ({r}, {c}) outside {rows}x{cols} matrix"
                )));
            }
            pairs[*c].push((*r, v.clone()));
        }
        Ok(Matrix { rows, cols, columns: pairs.into_iter().map(SparseVec::from_pairs).collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// Entries sorted by `(row, col)`.
    pub fn triplets(&self) -> Vec<(usize, usize, Scalar)> {
        let mut t: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (r, c, v.clone())))
            .collect();
        t.sort_by_key(|(r, c, _)| (*r, *c));
        t
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                pairs[r].push((c, v.clone()));
            }
        }
        pairs.into_iter().map(SparseVec::from_pairs).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix { rows: self.cols, cols: self.rows, columns: self.row_vectors() }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (c, x) in v.iter() {
            acc = acc.axpy(x, &self.columns[c]);
        }
        acc
    }

    /// `self * rhs`; panics on shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            columns: rhs.columns.iter().map(|c| self.mul_vec(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Stacks matrices with a common column count on top of each other.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut rows = 0;
        let mut pairs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            for (c, col) in b.columns.iter().enumerate() {
                for (r, v) in col.iter() {
                    pairs[c].push((r + rows, v.clone()));
                }
            }
            rows += b.rows;
        }
        Matrix { rows, cols, columns: pairs.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn row_echelon(&self) -> Echelon {
        Echelon::from_vectors(self.cols, self.row_vectors().iter())
    }

    pub fn column_echelon(&self) -> Echelon {
        Echelon::from_vectors(self.rows, self.columns.iter())
    }

    pub fn rank(&self) -> usize {
        if self.rows < self.cols {
            self.row_echelon().rank()
        } else {
            self.column_echelon().rank()
        }
    }

    /// Basis of the null space. Each vector carries a `1` at one non-pivot
    /// column and `0` at the others, so the count is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        self.row_echelon().null_space()
    }

    /// Restricts the domain to the span of `basis` (as columns).
    pub fn compose_columns(&self, basis: &[SparseVec]) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: basis.len(),
            columns: basis.iter().map(|v| self.mul_vec(v)).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in self.row_vectors() {
            let dense = r.to_dense(self.cols);
            let cells: Vec<String> = dense.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, entries: self.triplets() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        Matrix::from_triplets(r.rows, r.cols, &r.entries).map_err(D::Error::custom)
    }
}

/// Free-function form of [`Matrix::kernel_basis`].
pub fn kernel_basis(m: &Matrix) -> Vec<SparseVec> {
    m.kernel_basis()
}
