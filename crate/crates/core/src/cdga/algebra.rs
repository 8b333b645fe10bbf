//! Semifree graded-commutative DG algebras with a weight grading.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::parse::{format_poly, parse_poly};
use super::poly::{Monomial, Poly};
use crate::error::{DkError, Result};
use crate::linear::{ChainComplex, GradedVectorSpace, Matrix, Scalar, SparseVec};

fn default_weight() -> u32 {
    1
}

/// A named generator with chain degree and weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    #[serde(default = "default_weight")]
    pub weight: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: usize, weight: u32) -> Self {
        Generator { name: name.into(), degree, weight }
    }
}

/// Serialized form: generators plus differentials as polynomial strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
}

/// Homology of one bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedHomology {
    pub degree: usize,
    pub weight: u32,
    pub dimension: usize,
    pub representatives: Vec<Poly>,
}

/// The finite complex of one weight, with its monomial bases.
#[derive(Clone, Debug)]
pub struct WeightSlice {
    pub weight: u32,
    pub complex: ChainComplex,
    pub bases: Vec<Vec<Monomial>>,
}

impl WeightSlice {
    pub fn coordinates(&self, degree: usize, p: &Poly) -> Result<SparseVec> {
        coordinates(&self.bases[degree], p)
    }

    pub fn polynomial(&self, degree: usize, v: &SparseVec) -> Poly {
        v.iter().map(|(i, c)| (self.bases[degree][i].clone(), c.clone())).collect()
    }
}

/// Coordinates of `p` in a sorted monomial basis.
pub fn coordinates(basis: &[Monomial], p: &Poly) -> Result<SparseVec> {
    p.terms()
        .map(|(m, c)| {
            basis
                .binary_search(m)
                .map(|i| (i, c.clone()))
                .map_err(|_| DkError::Homogeneity(format!("monomial {m:?} outside the slice")))
        })
        .collect::<Result<Vec<_>>>()
        .map(SparseVec::from_pairs)
}

/// Semifree graded-commutative DG algebra: free on the generators, with
/// the differential given on generators and extended by the graded Leibniz
/// rule. Generators are stored in canonical order `(degree, name)`; a
/// polynomial's variable indices refer to that order.
#[derive(Clone, Debug)]
pub struct FreeCdga {
    generators: Vec<Generator>,
    differential: Vec<Poly>,
    odd: Vec<bool>,
    index: HashMap<String, usize>,
    weight_graded: bool,
}

impl PartialEq for FreeCdga {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.differential == other.differential
    }
}

impl Eq for FreeCdga {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl FreeCdga {
    /// Builds an algebra from generators in any order; `differential[i]` is
    /// `d` of `generators[i]`, written with indices into the same list.
    pub fn new(generators: Vec<Generator>, differential: Vec<Poly>) -> Result<Self> {
        if generators.len() != differential.len() {
            return Err(DkError::InvalidAlgebra("one differential per generator required".into()));
        }
        let mut seen = HashMap::new();
        for g in &generators {
            if !is_identifier(&g.name) {
                return Err(DkError::InvalidAlgebra(format!("`{}` is not a valid generator name", g.name)));
            }
            if g.weight == 0 {
                return Err(DkError::InvalidAlgebra(format!("generator `{}` has weight 0", g.name)));
            }
            if seen.insert(g.name.clone(), ()).is_some() {
                return Err(DkError::InvalidAlgebra(format!("duplicate generator `{}`", g.name)));
            }
        }
        let mut order: Vec<usize> = (0..generators.len()).collect();
        order.sort_by(|a, b| {
            (generators[*a].degree, &generators[*a].name).cmp(&(generators[*b].degree, &generators[*b].name))
        });
        let mut new_index = vec![0; generators.len()];
        for (new, old) in order.iter().enumerate() {
            new_index[*old] = new;
        }
        let sorted: Vec<Generator> = order.iter().map(|i| generators[*i].clone()).collect();
        let odd: Vec<bool> = sorted.iter().map(|g| g.degree % 2 == 1).collect();
        for p in &differential {
            if p.variables().iter().any(|v| *v >= generators.len()) {
                return Err(DkError::InvalidAlgebra("differential uses an unknown variable".into()));
            }
        }
        let diff: Vec<Poly> = order.iter().map(|i| differential[*i].relabel(&new_index, &odd)).collect();
        let index = sorted.iter().enumerate().map(|(i, g)| (g.name.clone(), i)).collect();
        let mut a = FreeCdga { generators: sorted, differential: diff, odd, index, weight_graded: true };
        a.validate()?;
        Ok(a)
    }

    fn validate(&mut self) -> Result<()> {
        let mut weight_graded = true;
        for (i, g) in self.generators.iter().enumerate() {
            let dg = &self.differential[i];
            if dg.is_zero() {
                continue;
            }
            if g.degree == 0 {
                return Err(DkError::InvalidAlgebra(format!("degree-0 generator `{}` must have d = 0", g.name)));
            }
            let degs = dg.gradings(|v| self.generators[v].degree);
            if degs != [g.degree - 1] {
                return Err(DkError::Homogeneity(format!(
                    "d({}) must have chain degree {}, found {:?}",
                    g.name,
                    g.degree - 1,
                    degs
                )));
            }
            let wts = dg.gradings(|v| self.generators[v].weight as usize);
            if wts != [g.weight as usize] {
                weight_graded = false;
            }
        }
        self.weight_graded = weight_graded;
        for (i, g) in self.generators.iter().enumerate() {
            let dd = self.differential(&self.differential[i]);
            if !dd.is_zero() {
                return Err(DkError::InvalidAlgebra(format!(
                    "d(d({})) = {} is not zero",
                    g.name,
                    self.format(&dd)
                )));
            }
        }
        Ok(())
    }

    /// The ground field.
    pub fn ground() -> Self {
        FreeCdga::new(Vec::new(), Vec::new()).expect("empty algebra")
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let names: HashMap<&str, usize> =
            spec.generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect();
        let odd: Vec<bool> = spec.generators.iter().map(|g| g.degree % 2 == 1).collect();
        let mut diff = vec![Poly::zero(); spec.generators.len()];
        for (name, text) in &spec.differential {
            let i = *names.get(name.as_str()).ok_or_else(|| DkError::UnknownGenerator(name.clone()))?;
            diff[i] = parse_poly(text, |s| names.get(s).copied(), &odd)?;
        }
        FreeCdga::new(spec.generators.clone(), diff)
    }

    /// Differentials are listed only for generators with `d ≠ 0`.
    pub fn to_spec(&self) -> AlgebraSpec {
        let differential = self
            .generators
            .iter()
            .zip(&self.differential)
            .filter(|(_, d)| !d.is_zero())
            .map(|(g, d)| (g.name.clone(), self.format(d)))
            .collect();
        AlgebraSpec { generators: self.generators.clone(), differential }
    }

    /// Graded symmetric algebra on a chain complex: one generator per basis
    /// vector, with the linear differential. Weights come from the complex
    /// (default 1).
    pub fn symmetric_on(c: &ChainComplex) -> Result<Self> {
        let mut gens = Vec::new();
        let mut offsets = Vec::new();
        for k in 0..=c.top() {
            offsets.push(gens.len());
            for b in 0..c.dim(k) {
                let name = c
                    .spaces()
                    .labels
                    .as_ref()
                    .map(|l| l[k][b].clone())
                    .filter(|n| is_identifier(n))
                    .unwrap_or_else(|| format!("v{k}_{b}"));
                gens.push(Generator::new(name, k, c.spaces().weight(k, b)));
            }
        }
        let mut diff = Vec::new();
        for k in 0..=c.top() {
            let d = c.boundary(k);
            for b in 0..c.dim(k) {
                let p = if k == 0 {
                    Poly::zero()
                } else {
                    d.column(b).iter().map(|(r, x)| (Monomial::var(offsets[k - 1] + r), x.clone())).collect()
                };
                diff.push(p);
            }
        }
        FreeCdga::new(gens, diff)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Odd flags of the generators, for polynomial arithmetic.
    pub fn parity(&self) -> &[bool] {
        &self.odd
    }

    /// Whether every differential is weight-homogeneous of its generator's
    /// weight.
    pub fn is_weight_graded(&self) -> bool {
        self.weight_graded
    }

    pub fn require_weight_graded(&self) -> Result<()> {
        if self.weight_graded {
            Ok(())
        } else {
            Err(DkError::NotWeightGraded("a differential is not weight-homogeneous".into()))
        }
    }

    /// `d` of generator `i`.
    pub fn generator_differential(&self, i: usize) -> &Poly {
        &self.differential[i]
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    pub fn degree(&self, m: &Monomial) -> usize {
        m.grading(|i| self.generators[i].degree)
    }

    pub fn weight(&self, m: &Monomial) -> u32 {
        m.grading(|i| self.generators[i].weight as usize) as u32
    }

    pub fn name(&self, i: usize) -> String {
        self.generators[i].name.clone()
    }

    pub fn format(&self, p: &Poly) -> String {
        format_poly(p, &|i| self.name(i))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        super::parse::format_monomial(m, &|i| self.name(i))
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        parse_poly(s, |n| self.index_of(n), &self.odd)
    }

    pub fn multiply(&self, p: &Poly, q: &Poly) -> Poly {
        p.mul(q, &self.odd)
    }

    /// Graded Leibniz extension of the generator differentials.
    pub fn differential(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            let factors = m.factors();
            let mut prefix_degree = 0usize;
            for (pos, (i, e)) in factors.iter().enumerate() {
                let dg = &self.differential[*i];
                if !dg.is_zero() {
                    // sign · e · (prefix · g^(e-1)) · d(g) · suffix; e > 1 only for even g
                    let mut left = factors[..pos].to_vec();
                    if *e > 1 {
                        left.push((*i, e - 1));
                    }
                    let suffix = Monomial::from_sorted(factors[pos + 1..].to_vec());
                    let mut coef = c * &Scalar::from_int(*e as i64);
                    if prefix_degree % 2 == 1 {
                        coef = -coef;
                    }
                    let term = Poly::term(Monomial::from_sorted(left), coef)
                        .mul(dg, &self.odd)
                        .mul(&Poly::monomial(suffix), &self.odd);
                    out.add_scaled(&Scalar::one(), &term);
                }
                prefix_degree += *e as usize * self.generators[*i].degree;
            }
        }
        out
    }

    /// Canonical monomials of bidegree `(n, w)`, sorted.
    pub fn basis(&self, n: usize, w: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate(0, n, w, &mut current, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, start: usize, n: usize, w: u32, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if n == 0 && w == 0 {
            out.push(Monomial::from_sorted(cur.clone()));
        }
        if w == 0 {
            return;
        }
        for i in start..self.generators.len() {
            let g = &self.generators[i];
            if g.weight > w || g.degree > n {
                continue;
            }
            let mut max_e = w / g.weight;
            if g.degree > 0 {
                max_e = max_e.min((n / g.degree) as u32);
            }
            if self.odd[i] {
                max_e = max_e.min(1);
            }
            for e in 1..=max_e {
                cur.push((i, e));
                self.enumerate(i + 1, n - e as usize * g.degree, w - e * g.weight, cur, out);
                cur.pop();
            }
        }
    }

    /// Largest chain degree a weight-`w` monomial can have.
    pub fn degree_bound(&self, w: u32) -> usize {
        self.generators
            .iter()
            .map(|g| (w / g.weight) as usize * g.degree)
            .max()
            .unwrap_or(0)
    }

    /// The weight-`w` part as a finite (complete) chain complex.
    pub fn weight_slice(&self, w: u32) -> Result<WeightSlice> {
        self.require_weight_graded()?;
        let top = self.degree_bound(w).max(1);
        let bases: Vec<Vec<Monomial>> = (0..=top).map(|n| self.basis(n, w)).collect();
        let mut diffs = Vec::with_capacity(top);
        for n in 1..=top {
            let cols = bases[n]
                .iter()
                .map(|m| coordinates(&bases[n - 1], &self.differential(&Poly::monomial(m.clone()))))
                .collect::<Result<Vec<_>>>()?;
            diffs.push(Matrix::from_columns(bases[n - 1].len(), cols));
        }
        let labels = bases.iter().map(|b| b.iter().map(|m| self.format_monomial(m)).collect()).collect();
        let mut space = GradedVectorSpace::new(bases.iter().map(Vec::len).collect());
        space.labels = Some(labels);
        let complex = ChainComplex::new(space, diffs)?.into_complete();
        Ok(WeightSlice { weight: w, complex, bases })
    }

    pub fn homology_bigraded(&self, n: usize, w: u32) -> Result<BigradedHomology> {
        let slice = self.weight_slice(w)?;
        if n > slice.complex.top() {
            return Ok(BigradedHomology { degree: n, weight: w, dimension: 0, representatives: Vec::new() });
        }
        let h = slice.complex.homology(n)?;
        let representatives = h.representatives.iter().map(|v| slice.polynomial(n, v)).collect();
        Ok(BigradedHomology { degree: n, weight: w, dimension: h.dimension, representatives })
    }

    /// Monomials of word length at least `r` in bidegree `(n, w)`.
    pub fn augmentation_ideal_basis(&self, r: u32, n: usize, w: u32) -> Vec<Monomial> {
        self.basis(n, w).into_iter().filter(|m| m.length() >= r).collect()
    }

    /// `dim (Ā^r / Ā^{r+1})` in bidegree `(n, w)`.
    pub fn gr_component(&self, r: u32, n: usize, w: u32) -> usize {
        self.basis(n, w).iter().filter(|m| m.length() == r).count()
    }

    /// Checks that `p` is homogeneous, returning its bidegree (`None` for
    /// zero).
    pub fn bidegree(&self, p: &Poly) -> Result<Option<(usize, u32)>> {
        let degs = p.gradings(|i| self.generators[i].degree);
        let wts = p.gradings(|i| self.generators[i].weight as usize);
        match (degs.as_slice(), wts.as_slice()) {
            ([], []) => Ok(None),
            ([d], [w]) => Ok(Some((*d, *w as u32))),
            _ => Err(DkError::Homogeneity(format!("{} is not bihomogeneous", self.format(p)))),
        }
    }

    /// Adjoins `g` with `d(g) = z` for a cycle `z` of degree `g.degree - 1`
    /// and weight `g.weight`.
    pub fn attach_cell(&self, g: Generator, z: &Poly) -> Result<FreeCdga> {
        if g.degree == 0 && !z.is_zero() {
            return Err(DkError::Homogeneity("a degree-0 cell has no attaching cycle".into()));
        }
        if let Some((n, w)) = self.bidegree(z)? {
            if n + 1 != g.degree || w != g.weight {
                return Err(DkError::Homogeneity(format!(
                    "attaching cycle has bidegree ({n}, {w}), need ({}, {})",
                    g.degree.saturating_sub(1),
                    g.weight
                )));
            }
        }
        let dz = self.differential(z);
        if !dz.is_zero() {
            return Err(DkError::NotCycle(self.format(&dz)));
        }
        let mut gens = self.generators.clone();
        gens.push(g);
        let mut diff = self.differential.clone();
        diff.push(z.clone());
        FreeCdga::new(gens, diff)
    }
}
