use serde::{Deserialize, Serialize};

use super::simplex::{operator_steps, MonotoneMap, Step};
use crate::error::{DkError, Result};
use crate::linear::{ChainComplex, Echelon, GradedVectorSpace, Homology, Matrix, SparseVec};

/// Degree-truncated simplicial vector space with explicit structure matrices.
///
/// `faces[n][i]` is `d_i : V_n -> V_{n-1}` (empty for `n = 0`),
/// `degeneracies[n][j]` is `s_j : V_n -> V_{n+1}` for `n < top`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpaceRepr")]
pub struct SimplicialVectorSpace {
    levels: GradedVectorSpace,
    faces: Vec<Vec<Matrix>>,
    degeneracies: Vec<Vec<Matrix>>,
}

#[derive(Deserialize)]
struct SpaceRepr {
    levels: GradedVectorSpace,
    faces: Vec<Vec<Matrix>>,
    degeneracies: Vec<Vec<Matrix>>,
}

impl TryFrom<SpaceRepr> for SimplicialVectorSpace {
    type Error = DkError;
    fn try_from(r: SpaceRepr) -> Result<Self> {
        SimplicialVectorSpace::new(r.levels, r.faces, r.degeneracies)
    }
}

/// Normalized chains together with the subspace bases they were built from.
#[derive(Clone, Debug)]
pub struct NormalizedChains {
    pub complex: ChainComplex,
    /// Basis of `∩_{i≥1} ker d_i` inside each level, as coordinate vectors.
    pub bases: Vec<Vec<SparseVec>>,
    /// Columns at which basis vector `r` has a 1 and all others a 0; the
    /// coordinates of a normalized vector are its entries at these columns.
    pub coord_cols: Vec<Vec<usize>>,
}

impl NormalizedChains {
    /// Coordinates of `v` (a vector of level `k`) in the normalized basis,
    /// or `None` if `v` is not normalized.
    pub fn coordinates(&self, k: usize, v: &SparseVec) -> Option<SparseVec> {
        let cols = &self.coord_cols[k];
        let coords: SparseVec =
            cols.iter().enumerate().map(|(r, c)| (r, v.get(*c))).collect();
        let mut rebuilt = SparseVec::new();
        for (r, x) in coords.iter() {
            rebuilt = rebuilt.axpy(x, &self.bases[k][r]);
        }
        (rebuilt == *v).then_some(coords)
    }

    /// Level vector of the normalized element with coordinates `c`.
    pub fn embed(&self, k: usize, c: &SparseVec) -> SparseVec {
        let mut v = SparseVec::new();
        for (r, x) in c.iter() {
            v = v.axpy(x, &self.bases[k][r]);
        }
        v
    }
}

impl SimplicialVectorSpace {
    /// Validates shapes and every simplicial identity.
    pub fn new(levels: GradedVectorSpace, faces: Vec<Vec<Matrix>>, degeneracies: Vec<Vec<Matrix>>) -> Result<Self> {
        let v = SimplicialVectorSpace::new_unchecked(levels, faces, degeneracies)?;
        v.check_identities()?;
        Ok(v)
    }

    /// Validates shapes only.
    pub fn new_unchecked(
        levels: GradedVectorSpace,
        faces: Vec<Vec<Matrix>>,
        degeneracies: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let top = levels.top();
        let bad = |m: String| Err(DkError::Simplicial(m));
        if faces.len() != top + 1 || degeneracies.len() != top + 1 {
            return bad(format!("expected {} face and degeneracy lists", top + 1));
        }
        for n in 0..=top {
            let nf = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != nf {
                return bad(format!("level {n} needs {nf} faces"));
            }
            for (i, d) in faces[n].iter().enumerate() {
                if d.rows() != levels.dim(n - 1) || d.cols() != levels.dim(n) {
                    return bad(format!("d_{i} at level {n} has wrong shape"));
                }
            }
            let ns = if n < top { n + 1 } else { 0 };
            if degeneracies[n].len() != ns {
                return bad(format!("level {n} needs {ns} degeneracies"));
            }
            for (j, s) in degeneracies[n].iter().enumerate() {
                if s.rows() != levels.dim(n + 1) || s.cols() != levels.dim(n) {
                    return bad(format!("s_{j} at level {n} has wrong shape"));
                }
            }
        }
        Ok(SimplicialVectorSpace { levels, faces, degeneracies })
    }

    /// Constant simplicial space on a vector space of dimension `dim`.
    pub fn constant(dim: usize, top: usize) -> Self {
        let levels = GradedVectorSpace::new(vec![dim; top + 1]);
        let faces = (0..=top)
            .map(|n| if n == 0 { vec![] } else { vec![Matrix::identity(dim); n + 1] })
            .collect();
        let degs = (0..=top)
            .map(|n| if n < top { vec![Matrix::identity(dim); n + 1] } else { vec![] })
            .collect();
        SimplicialVectorSpace::new(levels, faces, degs).expect("constant space")
    }

    pub fn top(&self) -> usize {
        self.levels.top()
    }

    pub fn levels(&self) -> &GradedVectorSpace {
        &self.levels
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels.dim(n)
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &Matrix {
        &self.degeneracies[n][j]
    }

    pub fn check_identities(&self) -> Result<()> {
        let top = self.top();
        let fail = |m: String| Err(DkError::Simplicial(m));
        // d_i d_j = d_{j-1} d_i, i < j
        for n in 2..=top {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = self.faces[n - 1][i].mul(&self.faces[n][j]);
                    let rhs = self.faces[n - 1][j - 1].mul(&self.faces[n][i]);
                    if lhs != rhs {
                        return fail(format!("d_{i} d_{j} != d_{} d_{i} at level {n}", j - 1));
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i, i <= j
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = self.degeneracies[n + 1][i].mul(&self.degeneracies[n][j]);
                    let rhs = self.degeneracies[n + 1][j + 1].mul(&self.degeneracies[n][i]);
                    if lhs != rhs {
                        return fail(format!("s_{i} s_{j} != s_{} s_{i} at level {n}", j + 1));
                    }
                }
            }
        }
        // d_i s_j
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = self.faces[n + 1][i].mul(&self.degeneracies[n][j]);
                    let rhs = if i == j || i == j + 1 {
                        Matrix::identity(self.dim(n))
                    } else if i < j {
                        self.degeneracies[n - 1][j - 1].mul(&self.faces[n][i])
                    } else {
                        self.degeneracies[n - 1][j].mul(&self.faces[n][i - 1])
                    };
                    if lhs != rhs {
                        return fail(format!("d_{i} s_{j} identity fails at level {n}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `θ^* : V_n -> V_m` for a monotone `θ : [m] -> [n]`.
    pub fn operator(&self, theta: &MonotoneMap) -> Matrix {
        let mut level = theta.target();
        let mut acc = Matrix::identity(self.dim(level));
        for step in operator_steps(theta) {
            let (m, next) = match step {
                Step::Face(i) => (&self.faces[level][i], level - 1),
                Step::Degeneracy(j) => (&self.degeneracies[level][j], level + 1),
            };
            acc = m.mul(&acc);
            level = next;
        }
        acc
    }

    /// Moore normalization: `∩_{i=1..k} ker d_i` with differential `d_0`.
    pub fn normalized(&self) -> NormalizedChains {
        let top = self.top();
        let mut bases = Vec::with_capacity(top + 1);
        let mut coord_cols = Vec::with_capacity(top + 1);
        for k in 0..=top {
            if k == 0 {
                bases.push((0..self.dim(0)).map(SparseVec::unit).collect());
                coord_cols.push((0..self.dim(0)).collect());
                continue;
            }
            let blocks: Vec<&Matrix> = (1..=k).map(|i| &self.faces[k][i]).collect();
            let ech = Matrix::vstack(self.dim(k), &blocks).row_echelon();
            coord_cols.push(ech.free_cols());
            bases.push(ech.null_space());
        }
        let mut partial = NormalizedChains {
            complex: ChainComplex::zero(0),
            bases,
            coord_cols,
        };
        let diffs: Vec<Matrix> = (1..=top)
            .map(|k| {
                let cols = partial.bases[k]
                    .iter()
                    .map(|b| {
                        let img = self.faces[k][0].mul_vec(b);
                        partial
                            .coordinates(k - 1, &img)
                            .expect("d_0 maps normalized chains into normalized chains")
                    })
                    .collect();
                Matrix::from_columns(partial.bases[k - 1].len(), cols)
            })
            .collect();
        let dims = partial.bases.iter().map(Vec::len).collect();
        partial.complex = ChainComplex::from_dims(dims, diffs).expect("normalized complex");
        partial
    }

    pub fn normalized_chains(&self) -> ChainComplex {
        self.normalized().complex
    }

    pub fn homotopy_normalized(&self, k: usize) -> Result<Homology> {
        self.normalized_chains().homology(k)
    }

    /// `π_k` as `(∩_{i=0..k} ker d_i) / d_0(∩_{i=1..k+1} ker d_i)`,
    /// computed without building the normalized complex.
    pub fn homotopy_moore(&self, k: usize) -> Result<usize> {
        let top = self.top();
        if top == 0 || k > top - 1 {
            return Err(DkError::OutOfRange { degree: k, max: top.saturating_sub(1) });
        }
        let cycles = if k == 0 {
            self.dim(0)
        } else {
            let blocks: Vec<&Matrix> = (0..=k).map(|i| &self.faces[k][i]).collect();
            self.dim(k) - Matrix::vstack(self.dim(k), &blocks).rank()
        };
        let blocks: Vec<&Matrix> = (1..=k + 1).map(|i| &self.faces[k + 1][i]).collect();
        let inner = Matrix::vstack(self.dim(k + 1), &blocks).kernel_basis();
        let images: Vec<SparseVec> = inner.iter().map(|v| self.faces[k + 1][0].mul_vec(v)).collect();
        let boundaries = Echelon::from_vectors(self.dim(k), images.iter()).rank();
        Ok(cycles - boundaries)
    }

    /// Dimension of the span of all degeneracy images in level `k`.
    pub fn degenerate_dim(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        let mut e = Echelon::new(self.dim(k));
        for s in &self.degeneracies[k - 1] {
            for c in s.columns() {
                e.insert(c);
            }
        }
        e.rank()
    }

    /// The simplicial subspace spanned levelwise by `spans[n]`. Its basis at
    /// level `n` is the reduced row echelon basis of the span, so the
    /// coordinates of a member are its entries at the pivot columns.
    pub fn restrict(&self, spans: &[Vec<SparseVec>]) -> Result<SimplicialVectorSpace> {
        let top = self.top();
        if spans.len() != top + 1 {
            return Err(DkError::Dimension(format!("need {} spanning sets", top + 1)));
        }
        let echelons: Vec<Echelon> = (0..=top).map(|n| Echelon::from_vectors(self.dim(n), spans[n].iter())).collect();
        let bases: Vec<Vec<(usize, SparseVec)>> =
            echelons.iter().map(|e| e.rows().map(|(c, r)| (c, r.clone())).collect()).collect();
        let restrict_map = |m: &Matrix, from: usize, to: usize| -> Result<Matrix> {
            let cols = bases[from]
                .iter()
                .map(|(_, b)| {
                    let img = m.mul_vec(b);
                    if !echelons[to].contains(&img) {
                        return Err(DkError::Simplicial("subspaces are not closed under the structure maps".into()));
                    }
                    Ok(bases[to].iter().enumerate().map(|(r, (c, _))| (r, img.get(*c))).collect())
                })
                .collect::<Result<Vec<SparseVec>>>()?;
            Ok(Matrix::from_columns(bases[to].len(), cols))
        };
        let faces = (0..=top)
            .map(|n| (0..self.faces[n].len()).map(|i| restrict_map(&self.faces[n][i], n, n - 1)).collect())
            .collect::<Result<Vec<Vec<Matrix>>>>()?;
        let degs = (0..=top)
            .map(|n| {
                (0..self.degeneracies[n].len()).map(|j| restrict_map(&self.degeneracies[n][j], n, n + 1)).collect()
            })
            .collect::<Result<Vec<Vec<Matrix>>>>()?;
        SimplicialVectorSpace::new_unchecked(GradedVectorSpace::new(bases.iter().map(Vec::len).collect()), faces, degs)
    }

    /// Levelwise direct sum.
    pub fn direct_sum(&self, other: &SimplicialVectorSpace) -> SimplicialVectorSpace {
        let top = self.top().min(other.top());
        let block = |a: &Matrix, b: &Matrix| {
            let off_r = a.rows();
            let mut cols = a.columns().to_vec();
            cols.extend(b.columns().iter().map(|c| c.select(|i| Some(i + off_r))));
            Matrix::from_columns(a.rows() + b.rows(), cols)
        };
        let dims = (0..=top).map(|n| self.dim(n) + other.dim(n)).collect();
        let weights = match (&self.levels.weights, &other.levels.weights) {
            (None, None) => None,
            _ => Some(
                (0..=top)
                    .map(|n| {
                        let mut w: Vec<u32> = (0..self.dim(n)).map(|i| self.levels.weight(n, i)).collect();
                        w.extend((0..other.dim(n)).map(|i| other.levels.weight(n, i)));
                        w
                    })
                    .collect(),
            ),
        };
        let faces = (0..=top)
            .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| block(&self.faces[n][i], &other.faces[n][i])).collect() })
            .collect();
        let degs = (0..=top)
            .map(|n| {
                if n < top {
                    (0..=n).map(|j| block(&self.degeneracies[n][j], &other.degeneracies[n][j])).collect()
                } else {
                    vec![]
                }
            })
            .collect();
        let mut levels = GradedVectorSpace::new(dims);
        levels.weights = weights;
        SimplicialVectorSpace::new_unchecked(levels, faces, degs).expect("direct sum")
    }

    /// Changes basis levelwise: `p[n]` maps old coordinates to new ones.
    pub fn conjugate(&self, p: &[Matrix], p_inv: &[Matrix]) -> Result<SimplicialVectorSpace> {
        let top = self.top();
        let faces = (0..=top)
            .map(|n| {
                if n == 0 {
                    vec![]
                } else {
                    self.faces[n].iter().map(|d| p[n - 1].mul(d).mul(&p_inv[n])).collect()
                }
            })
            .collect();
        let degs = (0..=top)
            .map(|n| {
                if n < top {
                    self.degeneracies[n].iter().map(|s| p[n + 1].mul(s).mul(&p_inv[n])).collect()
                } else {
                    vec![]
                }
            })
            .collect();
        SimplicialVectorSpace::new(GradedVectorSpace::new(self.levels.dims.clone()), faces, degs)
    }

    /// Attaches per-basis-vector weights (used by the free algebra functor).
    pub fn with_weights(mut self, weights: Vec<Vec<u32>>) -> Result<Self> {
        if weights.len() != self.levels.dims.len() || weights.iter().zip(&self.levels.dims).any(|(w, d)| w.len() != *d) {
            return Err(DkError::Dimension("weight lists do not match level dimensions".into()));
        }
        self.levels.weights = Some(weights);
        Ok(self)
    }

    pub(crate) fn with_labels(mut self, labels: Vec<Vec<String>>) -> Self {
        self.levels.labels = Some(labels);
        self
    }
}

/// Free-function form of [`SimplicialVectorSpace::normalized_chains`].
pub fn normalized_chains(v: &SimplicialVectorSpace) -> ChainComplex {
    v.normalized_chains()
}

pub fn homotopy_normalized(v: &SimplicialVectorSpace, k: usize) -> Result<usize> {
    Ok(v.homotopy_normalized(k)?.dimension)
}

pub fn homotopy_moore(v: &SimplicialVectorSpace, k: usize) -> Result<usize> {
    v.homotopy_moore(k)
}
