//! Finite-type chain complexes concentrated in degrees `0..=top`.

use serde::{Deserialize, Serialize};

use super::{Echelon, Matrix, SparseVec};
use crate::error::{DkError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedVectorSpace {
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<String>>>,
    /// Per-basis weights; absent means every basis vector has weight 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Vec<u32>>>,
}

impl GradedVectorSpace {
    pub fn new(dims: Vec<usize>) -> Self {
        GradedVectorSpace { dims, labels: None, weights: None }
    }

    pub fn top(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn weight(&self, k: usize, i: usize) -> u32 {
        self.weights.as_ref().map_or(1, |w| w[k][i])
    }

    fn validate(&self) -> Result<()> {
        if self.dims.is_empty() {
            return Err(DkError::Dimension("graded space needs at least degree 0".into()));
        }
        if let Some(l) = &self.labels {
            if l.len() != self.dims.len() || l.iter().zip(&self.dims).any(|(l, d)| l.len() != *d) {
                return Err(DkError::Dimension("label lists do not match dims".into()));
            }
        }
        if let Some(w) = &self.weights {
            if w.len() != self.dims.len() || w.iter().zip(&self.dims).any(|(w, d)| w.len() != *d) {
                return Err(DkError::Dimension("weight lists do not match dims".into()));
            }
        }
        Ok(())
    }
}

/// Result of a homology computation in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub dimension: usize,
    /// Cycles whose classes form a basis of the homology.
    pub representatives: Vec<SparseVec>,
    /// False in the top stored degree of a truncated complex, where
    /// boundaries from above are unknown.
    pub reliable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ChainComplexRepr")]
pub struct ChainComplex {
    spaces: GradedVectorSpace,
    /// `differentials[k - 1]` is the boundary from degree `k` to `k - 1`.
    differentials: Vec<Matrix>,
    /// True when the complex is known to vanish above its top degree.
    complete: bool,
}

#[derive(Deserialize)]
struct ChainComplexRepr {
    spaces: GradedVectorSpace,
    differentials: Vec<Matrix>,
    #[serde(default)]
    complete: bool,
}

impl TryFrom<ChainComplexRepr> for ChainComplex {
    type Error = DkError;
    fn try_from(r: ChainComplexRepr) -> Result<Self> {
        let c = ChainComplex::new(r.spaces, r.differentials)?;
        Ok(if r.complete { c.into_complete() } else { c })
    }
}

impl ChainComplex {
    /// Validates shapes and `d o d = 0`.
    pub fn new(spaces: GradedVectorSpace, differentials: Vec<Matrix>) -> Result<Self> {
        spaces.validate()?;
        let top = spaces.top();
        if differentials.len() != top {
            return Err(DkError::Dimension(format!(
                "expected {top} differentials, got {}",
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            let k = i + 1;
            if d.rows() != spaces.dims[k - 1] || d.cols() != spaces.dims[k] {
                return Err(DkError::Dimension(format!(
                    "d_{k} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    spaces.dims[k - 1],
                    spaces.dims[k]
                )));
            }
        }
        for k in 1..top {
            if !differentials[k - 1].mul(&differentials[k]).is_zero() {
                return Err(DkError::Dimension(format!("d_{k} d_{} != 0", k + 1)));
            }
        }
        Ok(ChainComplex { spaces, differentials, complete: false })
    }

    pub fn from_dims(dims: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        ChainComplex::new(GradedVectorSpace::new(dims), differentials)
    }

    /// Marks the complex as vanishing above its top degree.
    pub fn into_complete(mut self) -> Self {
        self.complete = true;
        self
    }

    /// A complete complex extended by zero spaces up to degree `top`.
    pub fn padded(&self, top: usize) -> Result<ChainComplex> {
        if top < self.top() {
            return Err(DkError::Dimension(format!("cannot pad degree {} complex down to {top}", self.top())));
        }
        if !self.complete && top > self.top() {
            return Err(DkError::InsufficientTruncation { needed: top, have: self.top() });
        }
        let mut spaces = self.spaces.clone();
        spaces.dims.resize(top + 1, 0);
        if let Some(l) = &mut spaces.labels {
            l.resize(top + 1, Vec::new());
        }
        if let Some(w) = &mut spaces.weights {
            w.resize(top + 1, Vec::new());
        }
        let mut diffs = self.differentials.clone();
        for k in self.top() + 1..=top {
            diffs.push(Matrix::zero(spaces.dims[k - 1], 0));
        }
        let c = ChainComplex::new(spaces, diffs)?;
        Ok(if self.complete { c.into_complete() } else { c })
    }

    /// The part in degrees `0..=top`; complete only if nothing was cut.
    pub fn truncated(&self, top: usize) -> ChainComplex {
        if top >= self.top() {
            return self.clone();
        }
        let mut spaces = self.spaces.clone();
        spaces.dims.truncate(top + 1);
        if let Some(l) = &mut spaces.labels {
            l.truncate(top + 1);
        }
        if let Some(w) = &mut spaces.weights {
            w.truncate(top + 1);
        }
        let diffs = self.differentials[..top].to_vec();
        ChainComplex::new(spaces, diffs).expect("truncation of a valid complex")
    }

    pub fn zero(top: usize) -> Self {
        ChainComplex::from_dims(vec![0; top + 1], (0..top).map(|_| Matrix::zero(0, 0)).collect())
            .expect("zero complex")
    }

    /// `S^n`: the ground field in degree `n`, truncated at `top >= n`.
    pub fn sphere(n: usize, top: usize) -> Self {
        assert!(top >= n);
        let dims: Vec<usize> = (0..=top).map(|k| usize::from(k == n)).collect();
        let diffs = (1..=top).map(|k| Matrix::zero(dims[k - 1], dims[k])).collect();
        ChainComplex::from_dims(dims, diffs).expect("sphere complex")
    }

    /// `D^n`: the ground field in degrees `n - 1` and `n` joined by the
    /// identity; `D^0` is the field in degree 0.
    pub fn disk(n: usize, top: usize) -> Self {
        assert!(top >= n);
        if n == 0 {
            return ChainComplex::sphere(0, top);
        }
        let dims: Vec<usize> = (0..=top).map(|k| usize::from(k == n || k + 1 == n)).collect();
        let diffs = (1..=top)
            .map(|k| if k == n { Matrix::identity(1) } else { Matrix::zero(dims[k - 1], dims[k]) })
            .collect();
        ChainComplex::from_dims(dims, diffs).expect("disk complex")
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let top = self.top().min(other.top());
        let dims: Vec<usize> = (0..=top).map(|k| self.dim(k) + other.dim(k)).collect();
        let diffs = (1..=top)
            .map(|k| {
                let a = self.boundary(k);
                let b = other.boundary(k);
                let mut cols: Vec<SparseVec> = a.columns().to_vec();
                let off = a.rows();
                cols.extend(b.columns().iter().map(|c| c.select(|i| Some(i + off))));
                Matrix::from_columns(dims[k - 1], cols)
            })
            .collect();
        let mut c = ChainComplex::from_dims(dims, diffs).expect("direct sum");
        c.complete = self.complete && other.complete && self.top() == other.top();
        c
    }

    pub fn spaces(&self) -> &GradedVectorSpace {
        &self.spaces
    }

    pub fn top(&self) -> usize {
        self.spaces.top()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.spaces.dim(k)
    }

    pub fn dims(&self) -> &[usize] {
        &self.spaces.dims
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// Boundary `d_k : C_k -> C_{k-1}`; zero outside the stored range.
    pub fn boundary(&self, k: usize) -> Matrix {
        if k == 0 {
            Matrix::zero(0, self.dim(0))
        } else if k > self.top() {
            Matrix::zero(self.dim(k - 1), 0)
        } else {
            self.differentials[k - 1].clone()
        }
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<Self> {
        self.spaces.labels = Some(labels);
        self.spaces.validate()?;
        Ok(self)
    }

    pub fn with_weights(mut self, weights: Vec<Vec<u32>>) -> Result<Self> {
        self.spaces.weights = Some(weights);
        self.spaces.validate()?;
        Ok(self)
    }

    /// Homology in degree `k`.
    pub fn homology(&self, k: usize) -> Result<Homology> {
        if k > self.top() {
            return Err(DkError::OutOfRange { degree: k, max: self.top() });
        }
        let cycles = self.boundary(k).kernel_basis();
        let mut span = self.boundary(k + 1).column_echelon();
        let mut reps = Vec::new();
        for z in cycles {
            if span.insert(&z) {
                reps.push(z);
            }
        }
        Ok(Homology {
            dimension: reps.len(),
            representatives: reps,
            reliable: k < self.top() || self.complete,
        })
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|k| self.homology(k).expect("in range").dimension).collect()
    }

    /// Applies an invertible change of basis `p_k` in every degree.
    pub fn conjugate(&self, change: &[Matrix], inverses: &[Matrix]) -> Result<ChainComplex> {
        let diffs = (1..=self.top())
            .map(|k| change[k - 1].mul(&self.boundary(k)).mul(&inverses[k]))
            .collect();
        let mut c = ChainComplex::new(self.spaces.clone(), diffs)?;
        c.complete = self.complete;
        Ok(c)
    }
}

/// Free-function form of [`ChainComplex::homology`].
pub fn homology(c: &ChainComplex, k: usize) -> Result<Homology> {
    c.homology(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub induced_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiIsoReport {
    pub through_degree: usize,
    pub degrees: Vec<DegreeReport>,
    pub verdict: bool,
}

impl ChainMap {
    /// Checks shapes and commutation with the differentials in every stored
    /// degree.
    pub fn new(source: ChainComplex, target: ChainComplex, components: Vec<Matrix>) -> Result<Self> {
        let top = source.top().min(target.top());
        if components.len() != top + 1 {
            return Err(DkError::Dimension(format!(
                "chain map needs {} components, got {}",
                top + 1,
                components.len()
            )));
        }
        for (k, f) in components.iter().enumerate() {
            if f.rows() != target.dim(k) || f.cols() != source.dim(k) {
                return Err(DkError::Dimension(format!("component {k} has wrong shape")));
            }
        }
        for k in 1..=top {
            let lhs = components[k - 1].mul(&source.boundary(k));
            let rhs = target.boundary(k).mul(&components[k]);
            if lhs != rhs {
                return Err(DkError::NotChainMap(format!("fails to commute with d_{k}")));
            }
        }
        Ok(ChainMap { source, target, components })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let comps = (0..=c.top()).map(|k| Matrix::identity(c.dim(k))).collect();
        ChainMap::new(c.clone(), c.clone(), comps).expect("identity")
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    /// Rank of the induced map `H_k(source) -> H_k(target)`.
    pub fn induced_rank(&self, k: usize) -> usize {
        let cycles = self.source.boundary(k).kernel_basis();
        let n = self.target.dim(k);
        let mut span = Echelon::from_vectors(n, self.target.boundary(k + 1).columns());
        let base = span.rank();
        for z in &cycles {
            span.insert(&self.components[k].mul_vec(z));
        }
        span.rank() - base
    }

    pub fn is_quasi_iso(&self, through_degree: usize) -> Result<QuasiIsoReport> {
        for c in [&self.source, &self.target] {
            if !c.is_complete() && c.top() < through_degree + 1 {
                return Err(DkError::InsufficientTruncation {
                    needed: through_degree + 1,
                    have: c.top(),
                });
            }
            if c.top() < through_degree {
                return Err(DkError::InsufficientTruncation { needed: through_degree, have: c.top() });
            }
        }
        let mut degrees = Vec::new();
        let mut verdict = true;
        for k in 0..=through_degree {
            let s = self.source.homology(k)?.dimension;
            let t = self.target.homology(k)?.dimension;
            let r = self.induced_rank(k);
            verdict &= s == t && r == s;
            degrees.push(DegreeReport { degree: k, source_dim: s, target_dim: t, induced_rank: r });
        }
        Ok(QuasiIsoReport { through_degree, degrees, verdict })
    }
}

/// Free-function form of [`ChainMap::is_quasi_iso`].
pub fn is_quasi_iso(f: &ChainMap, through_degree: usize) -> Result<QuasiIsoReport> {
    f.is_quasi_iso(through_degree)
}
