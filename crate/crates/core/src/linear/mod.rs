//! Exact rational linear algebra: scalars, sparse vectors and matrices,
//! finite-type chain complexes and their homology.

mod complex;
mod echelon;
mod matrix;
mod scalar;
mod vector;

pub use complex::{
    homology, is_quasi_iso, ChainComplex, ChainMap, DegreeReport, GradedVectorSpace, Homology,
    QuasiIsoReport,
};
pub use echelon::Echelon;
pub use matrix::{kernel_basis, Matrix};
pub use scalar::Scalar;
pub use vector::SparseVec;
