//! The unit `β : A → N Q(A)`, `x ↦ [Γx]`, and its certification as a
//! quasi-isomorphism through a truncation.

use serde::{Deserialize, Serialize};

use super::qfunctor::QAlgebra;
use crate::cdga::{AlgebraSpec, Poly};
use crate::error::{DkError, Result};
use crate::linear::{ChainComplex, ChainMap, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeMatrix {
    pub degree: usize,
    pub weight: u32,
    pub matrix: Matrix,
}

/// Homology of both sides in one bidegree and the rank of the induced map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeReport {
    pub degree: usize,
    pub weight: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub induced_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitMapCertificate {
    pub source: AlgebraSpec,
    /// Levels built on the simplicial side.
    pub max_degree: usize,
    pub max_weight: u32,
    /// Homology is compared in degrees `0..=checked_through`.
    pub checked_through: usize,
    pub matrices: Vec<BidegreeMatrix>,
    pub reports: Vec<BidegreeReport>,
    pub verdict: bool,
}

/// Indecomposables of both sides in one bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndecomposablesRow {
    pub degree: usize,
    pub weight: u32,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl QAlgebra {
    /// The weight-`w` component of `β` as a chain map from the source slice
    /// (cut or padded to the top level) to the normalized quotient.
    pub fn beta_map(&self, w: u32) -> Result<ChainMap> {
        let top = self.top();
        let a = self.source();
        let slice = a.weight_slice(w)?;
        let src = if slice.complex.top() > top { slice.complex.truncated(top) } else { slice.complex.padded(top)? };
        let norm = self.model().normalized(w)?;
        let comps = (0..=top)
            .map(|k| {
                let basis = slice.bases.get(k).map_or(&[][..], Vec::as_slice);
                let cols = basis
                    .iter()
                    .map(|x| {
                        let g = self.gamma(k, &Poly::monomial(x.clone()))?;
                        let v = self.model().slice(k, w).reduce(&g)?;
                        norm.coordinates(k, &v).ok_or_else(|| {
                            DkError::Precondition(format!("unit image of {} is not normalized", a.format_monomial(x)))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(norm.complex.dim(k), cols))
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(src, norm.complex, comps)
    }

    /// Builds `β` in every weight `0..=max_weight`, checks that it is a
    /// chain map, and compares homology through degree `top - 1`.
    pub fn beta(&self) -> Result<UnitMapCertificate> {
        let through = self.top() - 1;
        let mut matrices = Vec::new();
        let mut reports = Vec::new();
        let mut verdict = true;
        for w in 0..=self.max_weight() {
            let f = self.beta_map(w)?;
            for (k, m) in f.components().iter().enumerate() {
                matrices.push(BidegreeMatrix { degree: k, weight: w, matrix: m.clone() });
            }
            let r = f.is_quasi_iso(through)?;
            verdict &= r.verdict;
            reports.extend(r.degrees.into_iter().map(|d| BidegreeReport {
                degree: d.degree,
                weight: w,
                source_dim: d.source_dim,
                target_dim: d.target_dim,
                induced_rank: d.induced_rank,
            }));
        }
        Ok(UnitMapCertificate {
            source: self.source().to_spec(),
            max_degree: self.top(),
            max_weight: self.max_weight(),
            checked_through: through,
            matrices,
            reports,
            verdict,
        })
    }

    /// `dim Ā/Ā²` of the source against the normalized dimension of the
    /// indecomposables of `Q(A)`, per bidegree with positive weight.
    pub fn indecomposables_table(&self) -> Result<Vec<IndecomposablesRow>> {
        let mut rows = Vec::new();
        for w in 1..=self.max_weight() {
            let n = self.model().indecomposables(w)?.normalized_chains();
            for k in 0..=self.top() {
                rows.push(IndecomposablesRow {
                    degree: k,
                    weight: w,
                    source_dim: self.source().gr_component(1, k, w),
                    target_dim: n.dim(k),
                });
            }
        }
        Ok(rows)
    }

    /// Homology of the weight-`w` normalized quotient in degrees `0..top`.
    pub fn homotopy_dims(&self, w: u32) -> Result<Vec<usize>> {
        let c: ChainComplex = self.model().normalized_algebra_complex(w)?;
        (0..self.top()).map(|k| Ok(c.homology(k)?.dimension)).collect()
    }
}
