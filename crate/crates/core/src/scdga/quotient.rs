//! Finite weight slices of a simplicial polynomial algebra modulo its
//! relations.

use std::collections::HashMap;

use rayon::prelude::*;

use super::algebra::SimplicialPolynomialAlgebra;
use crate::cdga::{format_monomial, Monomial, Poly};
use crate::error::{DkError, Result};
use crate::linear::{ChainComplex, Echelon, GradedVectorSpace, Matrix, SparseVec};
use crate::simplicial::{NormalizedChains, SimplicialVectorSpace};

/// Monomials of weight `w` in variables of the given weights, sorted.
pub fn monomials_of_weight(weights: &[u32], w: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], start: usize, w: u32, acc: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if w == 0 {
            out.push(Monomial::from_sorted(acc.clone()));
            return;
        }
        for v in start..weights.len() {
            let wv = weights[v];
            let mut e = 1;
            while e * wv <= w {
                acc.push((v, e));
                go(weights, v + 1, w - e * wv, acc, out);
                acc.pop();
                e += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(weights, 0, w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// One `(level, weight)` slice: the monomial basis of the free slice, the
/// span of relation multiples inside it, and the quotient basis given by
/// the non-pivot monomials.
#[derive(Clone, Debug)]
pub struct Slice {
    pub level: usize,
    pub weight: u32,
    pub monomials: Vec<Monomial>,
    pub ideal: Echelon,
    /// Indices into `monomials` whose classes form the quotient basis.
    pub basis: Vec<usize>,
    position: HashMap<Monomial, usize>,
    quotient_index: HashMap<usize, usize>,
}

impl Slice {
    fn new(level: usize, weight: u32, monomials: Vec<Monomial>, ideal: Echelon) -> Self {
        let basis = ideal.free_cols();
        let position = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let quotient_index = basis.iter().enumerate().map(|(q, c)| (*c, q)).collect();
        Slice { level, weight, monomials, ideal, basis, position, quotient_index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `p` in the free slice.
    pub fn vector(&self, p: &Poly) -> Result<SparseVec> {
        p.terms()
            .map(|(m, c)| {
                self.position.get(m).map(|i| (*i, c.clone())).ok_or_else(|| {
                    DkError::Homogeneity(format!("polynomial leaves the weight-{} slice", self.weight))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(SparseVec::from_pairs)
    }

    /// Quotient coordinates of the class of `p`.
    pub fn reduce(&self, p: &Poly) -> Result<SparseVec> {
        Ok(self.reduce_vector(&self.vector(p)?))
    }

    pub fn reduce_vector(&self, v: &SparseVec) -> SparseVec {
        self.ideal.reduce(v).select(|c| self.quotient_index.get(&c).copied())
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// The polynomial combination of quotient basis monomials.
    pub fn lift(&self, q: &SparseVec) -> Poly {
        q.iter().map(|(i, c)| (self.monomials[self.basis[i]].clone(), c.clone())).collect()
    }
}

/// All slices of levels `0..=top` and weights `0..=max_weight`, with the
/// induced simplicial structure on each weight.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    algebra: SimplicialPolynomialAlgebra,
    max_weight: u32,
    /// `slices[n][w]`.
    slices: Vec<Vec<Slice>>,
}

impl QuotientModel {
    /// Builds every slice (in parallel) and checks that faces of relations
    /// stay in the relation span.
    pub fn new(algebra: SimplicialPolynomialAlgebra, max_weight: u32) -> Result<Self> {
        let top = algebra.top();
        let jobs: Vec<(usize, u32)> = (0..=top).flat_map(|n| (0..=max_weight).map(move |w| (n, w))).collect();
        let built: Vec<Slice> = jobs.par_iter().map(|(n, w)| build_slice(&algebra, *n, *w)).collect();
        let mut slices: Vec<Vec<Slice>> = vec![Vec::new(); top + 1];
        for s in built {
            slices[s.level].push(s);
        }
        let model = QuotientModel { algebra, max_weight, slices };
        model.check_relation_faces()?;
        Ok(model)
    }

    pub fn algebra(&self) -> &SimplicialPolynomialAlgebra {
        &self.algebra
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn top(&self) -> usize {
        self.algebra.top()
    }

    pub fn slice(&self, n: usize, w: u32) -> &Slice {
        &self.slices[n][w as usize]
    }

    /// Quotient dimensions per level for weight `w`.
    pub fn dims(&self, w: u32) -> Vec<usize> {
        (0..=self.top()).map(|n| self.slice(n, w).dim()).collect()
    }

    fn check_weight(&self, w: u32) -> Result<()> {
        if w > self.max_weight {
            return Err(DkError::OutOfRange { degree: w as usize, max: self.max_weight as usize });
        }
        Ok(())
    }

    /// Splits a level polynomial into weight-homogeneous parts.
    pub fn weight_parts(&self, n: usize, p: &Poly) -> Vec<(u32, Poly)> {
        let mut parts: std::collections::BTreeMap<u32, Poly> = Default::default();
        for (m, c) in p.terms() {
            parts.entry(self.algebra.weight(n, m)).or_insert_with(Poly::zero).add_term(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Whether `p` lies in the relation ideal; every weight part must be
    /// within the model.
    pub fn is_zero(&self, n: usize, p: &Poly) -> Result<bool> {
        for (w, part) in self.weight_parts(n, p) {
            self.check_weight(w)?;
            if !self.slice(n, w).contains(&part)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_relation_faces(&self) -> Result<()> {
        for n in 1..=self.top() {
            for r in self.algebra.relations(n) {
                for (w, _) in self.weight_parts(n, r) {
                    if w > self.max_weight {
                        continue;
                    }
                    for i in 0..=n {
                        if !self.is_zero(n - 1, &self.algebra.face(n, i, r))? {
                            return Err(DkError::Simplicial(format!(
                                "d_{i} of relation {} leaves the relation ideal",
                                self.algebra.format(n, r)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks every simplicial identity on generators modulo relations,
    /// for generators of weight at most the model bound.
    pub fn check_identities(&self) -> Result<()> {
        for id in self.algebra.identities() {
            for (g, gen) in self.algebra.generators(id.level).iter().enumerate() {
                if gen.weight > self.max_weight {
                    continue;
                }
                let x = Poly::var(g);
                let diff = (id.lhs)(&self.algebra, &x).sub(&(id.rhs)(&self.algebra, &x));
                if !self.is_zero(id.target_level, &diff)? {
                    return Err(DkError::Simplicial(format!(
                        "{} fails modulo relations on generator {g} of level {}",
                        id.name, id.level
                    )));
                }
            }
        }
        Ok(())
    }

    /// The weight-`w` quotient as a simplicial vector space, labelled by
    /// quotient basis monomials.
    pub fn simplicial_space(&self, w: u32) -> Result<SimplicialVectorSpace> {
        self.check_weight(w)?;
        self.space_from_slices(w, |n| self.slice(n, w).clone())
    }

    /// `Ā / Ā²` in weight `w`: the quotient further divided by all words of
    /// length at least two.
    pub fn indecomposables(&self, w: u32) -> Result<SimplicialVectorSpace> {
        self.check_weight(w)?;
        self.space_from_slices(w, |n| {
            let s = self.slice(n, w);
            let mut ideal = s.ideal.clone();
            for (i, m) in s.monomials.iter().enumerate() {
                if m.length() != 1 {
                    ideal.insert(&SparseVec::unit(i));
                }
            }
            Slice::new(n, w, s.monomials.clone(), ideal)
        })
    }

    fn space_from_slices(&self, w: u32, make: impl Fn(usize) -> Slice + Sync) -> Result<SimplicialVectorSpace> {
        let top = self.top();
        let slices: Vec<Slice> = (0..=top).into_par_iter().map(&make).collect();
        let a = &self.algebra;
        let matrix = |from: usize, to: usize, map: &dyn Fn(&Poly) -> Poly| -> Matrix {
            let (src, tgt) = (&slices[from], &slices[to]);
            let cols = src
                .basis
                .iter()
                .map(|c| tgt.reduce(&map(&Poly::monomial(src.monomials[*c].clone()))).expect("weight preserved"))
                .collect();
            Matrix::from_columns(tgt.dim(), cols)
        };
        let faces = (0..=top)
            .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| matrix(n, n - 1, &|p| a.face(n, i, p))).collect() })
            .collect();
        let degs = (0..=top)
            .map(|n| {
                if n < top {
                    (0..=n).map(|j| matrix(n, n + 1, &|p| a.degeneracy(n, j, p))).collect()
                } else {
                    vec![]
                }
            })
            .collect();
        let mut levels = GradedVectorSpace::new(slices.iter().map(Slice::dim).collect());
        levels.labels = Some(
            slices
                .iter()
                .enumerate()
                .map(|(n, s)| {
                    s.basis
                        .iter()
                        .map(|c| format_monomial(&s.monomials[*c], &|v| a.generators(n)[v].label.clone()))
                        .collect()
                })
                .collect(),
        );
        levels.weights = Some(slices.iter().map(|s| vec![w; s.dim()]).collect());
        SimplicialVectorSpace::new(levels, faces, degs)
    }

    pub fn normalized(&self, w: u32) -> Result<NormalizedChains> {
        Ok(self.simplicial_space(w)?.normalized())
    }

    /// Normalized chains of the weight-`w` quotient: `∩_{i≥1} ker d_i` with
    /// differential `d_0`.
    pub fn normalized_algebra_complex(&self, w: u32) -> Result<ChainComplex> {
        Ok(self.normalized(w)?.complex)
    }

    /// Shuffle product of quotient classes `x` at `(p, wx)` and `y` at
    /// `(q, wy)`, as quotient coordinates at `(p + q, wx + wy)`.
    pub fn ez_product(&self, p: usize, wx: u32, x: &SparseVec, q: usize, wy: u32, y: &SparseVec) -> Result<SparseVec> {
        self.check_weight(wx + wy)?;
        let px = self.slice(p, wx).lift(x);
        let py = self.slice(q, wy).lift(y);
        let prod = self.algebra.ez_product(p, &px, q, &py)?;
        self.slice(p + q, wx + wy).reduce(&prod)
    }
}

fn build_slice(a: &SimplicialPolynomialAlgebra, n: usize, w: u32) -> Slice {
    let weights: Vec<u32> = a.generators(n).iter().map(|g| g.weight).collect();
    let monomials = monomials_of_weight(&weights, w);
    let mut slice = Slice::new(n, w, monomials, Echelon::new(0));
    let mut ideal = Echelon::new(slice.monomials.len());
    for r in a.relations(n) {
        let rw = match a.weights_of(n, r).as_slice() {
            [rw] if *rw <= w => *rw,
            _ => continue,
        };
        for m in monomials_of_weight(&weights, w - rw) {
            let v = slice.vector(&Poly::monomial(m).mul(r, &[])).expect("relation multiple inside its slice");
            ideal.insert(&v);
        }
    }
    slice = Slice::new(n, w, slice.monomials, ideal);
    slice
}
