//! The inverse Dold–Kan functor.
//!
//! Level `n` of `Γ(C)` is `⊕_{σ : [n] ↠ [k]} C_k`. A simplicial operator
//! `θ : [m] -> [n]` sends the summand of `σ` along the epi-mono
//! factorization `σ ∘ θ = ε ∘ η`: identically to the summand of `η` when `ε`
//! is an identity, by the differential when `ε` is the coface `δ^0`, and to
//! zero otherwise.

use std::collections::HashMap;

use super::simplex::{MonotoneMap, Surjection};
use super::space::SimplicialVectorSpace;
use crate::linear::{ChainComplex, GradedVectorSpace, Matrix, SparseVec};

/// How a `Γ` summand transforms under a simplicial operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaAction {
    /// Lands on the summand of this surjection, identically.
    Same(Surjection),
    /// Lands on the summand of this surjection after applying the boundary.
    Boundary(Surjection),
    Zero,
}

/// `θ^*` applied to the summand indexed by `sigma`.
pub fn gamma_action(sigma: &Surjection, theta: &MonotoneMap) -> GammaAction {
    let k = sigma.target();
    let composite = sigma.to_map().compose(theta);
    let (eta, image) = composite.factor();
    let p = eta.target();
    if p == k {
        GammaAction::Same(eta)
    } else if p + 1 == k && image[0] == 1 {
        GammaAction::Boundary(eta)
    } else {
        GammaAction::Zero
    }
}

/// Basis bookkeeping for one level of `Γ(C)`: summands ordered by target
/// degree, then surjection, then basis index of `C_k`. The identity
/// surjection comes last.
#[derive(Clone, Debug)]
pub struct GammaLevel {
    pub entries: Vec<(Surjection, usize)>,
    index: HashMap<(Surjection, usize), usize>,
}

impl GammaLevel {
    fn new(n: usize, c: &ChainComplex) -> Self {
        let mut entries = Vec::new();
        for k in 0..=n.min(c.top()) {
            for s in Surjection::all(n, k) {
                for b in 0..c.dim(k) {
                    entries.push((s.clone(), b));
                }
            }
        }
        let index = entries.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        GammaLevel { entries, index }
    }

    pub fn position(&self, s: &Surjection, b: usize) -> Option<usize> {
        self.index.get(&(s.clone(), b)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `Γ(c)` materialized through the top degree of `c`.
pub fn gamma(c: &ChainComplex) -> SimplicialVectorSpace {
    gamma_with_levels(c).0
}

pub fn gamma_with_levels(c: &ChainComplex) -> (SimplicialVectorSpace, Vec<GammaLevel>) {
    let top = c.top();
    let levels: Vec<GammaLevel> = (0..=top).map(|n| GammaLevel::new(n, c)).collect();
    let op = |n: usize, theta: &MonotoneMap| -> Matrix {
        let m = theta.source();
        let cols = levels[n]
            .entries
            .iter()
            .map(|(sigma, b)| match gamma_action(sigma, theta) {
                GammaAction::Same(eta) => SparseVec::unit(levels[m].position(&eta, *b).expect("summand")),
                GammaAction::Boundary(eta) => {
                    let d = c.boundary(sigma.target());
                    SparseVec::from_pairs(
                        d.column(*b)
                            .iter()
                            .map(|(r, x)| (levels[m].position(&eta, r).expect("summand"), x.clone()))
                            .collect(),
                    )
                }
                GammaAction::Zero => SparseVec::new(),
            })
            .collect();
        Matrix::from_columns(levels[m].len(), cols)
    };
    let faces = (0..=top)
        .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| op(n, &MonotoneMap::coface(n, i))).collect() })
        .collect();
    let degs = (0..=top)
        .map(|n| if n < top { (0..=n).map(|j| op(n, &MonotoneMap::codegeneracy(n, j))).collect() } else { vec![] })
        .collect();
    let dims = levels.iter().map(GammaLevel::len).collect();
    let mut space = GradedVectorSpace::new(dims);
    if let Some(w) = &c.spaces().weights {
        space.weights = Some(
            levels.iter().map(|l| l.entries.iter().map(|(s, b)| w[s.target()][*b]).collect()).collect(),
        );
    }
    let labels = levels
        .iter()
        .map(|l| {
            l.entries
                .iter()
                .map(|(s, b)| {
                    let base = c
                        .spaces()
                        .labels
                        .as_ref()
                        .map_or_else(|| format!("c{}[{}]", s.target(), b), |ls| ls[s.target()][*b].clone());
                    format!("{base}@{s}")
                })
                .collect()
        })
        .collect();
    let v = SimplicialVectorSpace::new_unchecked(space, faces, degs)
        .expect("gamma shapes")
        .with_labels(labels);
    (v, levels)
}
