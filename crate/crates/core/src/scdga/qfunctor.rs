//! The left adjoint `Q` from weight-graded semifree DG algebras to
//! simplicial commutative algebras: the free levelwise algebra on `Γ` of the
//! underlying complex, divided by the relations identifying shuffle products
//! of `Γ`-images with `Γ` of products.

use std::collections::HashMap;

use super::algebra::{LevelGenerator, SimplicialPolynomialAlgebra};
use super::quotient::QuotientModel;
use crate::cdga::{FreeCdga, Monomial, Poly};
use crate::error::{DkError, Result};
use crate::simplicial::{gamma_action, GammaAction, MonotoneMap, Surjection};

/// A Q-generator: a basis monomial of the source in degree `k` together
/// with a surjection `[n] ↠ [k]`.
pub type QKey = (Monomial, Surjection);

/// `Q(A)` through level `top` and weight `max_weight`, with its quotient
/// model.
#[derive(Clone, Debug)]
pub struct QAlgebra {
    source: FreeCdga,
    model: QuotientModel,
    keys: Vec<Vec<QKey>>,
    index: Vec<HashMap<QKey, usize>>,
    base_relations: usize,
}

/// Builds `Q(a)` through level `top` and weight `max_weight`. Relations are
/// generated by `μ̂(Γx, Γy) - Γ(xy)` for basis monomials `x`, `y` with
/// `deg x + deg y ≤ top` and `wt x + wt y ≤ max_weight`, and all their
/// degeneracy images.
pub fn q_functor(a: &FreeCdga, top: usize, max_weight: u32) -> Result<QAlgebra> {
    a.require_weight_graded()?;
    if top == 0 {
        return Err(DkError::OutOfRange { degree: 0, max: 0 });
    }
    // basis of the underlying complex by degree, positive weights only
    let basis: Vec<Vec<(u32, Monomial)>> = (0..=top)
        .map(|k| (1..=max_weight).flat_map(|w| a.basis(k, w).into_iter().map(move |m| (w, m))).collect())
        .collect();
    let mut keys: Vec<Vec<QKey>> = Vec::with_capacity(top + 1);
    let mut generators = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut level = Vec::new();
        let mut gens = Vec::new();
        for (k, b) in basis.iter().enumerate().take(n + 1) {
            for (w, x) in b {
                for s in Surjection::all(n, k) {
                    gens.push(LevelGenerator { label: format!("{}@{s}", a.format_monomial(x)), weight: *w });
                    level.push((x.clone(), s));
                }
            }
        }
        keys.push(level);
        generators.push(gens);
    }
    let index: Vec<HashMap<QKey, usize>> =
        keys.iter().map(|l| l.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect()).collect();

    let differentials: HashMap<Monomial, Poly> = basis
        .iter()
        .flatten()
        .map(|(_, x)| (x.clone(), a.differential(&Poly::monomial(x.clone()))))
        .collect();
    let image = |n: usize, theta: &MonotoneMap| -> Vec<Poly> {
        let m = theta.source();
        keys[n]
            .iter()
            .map(|(x, sigma)| match gamma_action(sigma, theta) {
                GammaAction::Same(eta) => Poly::var(index[m][&(x.clone(), eta)]),
                GammaAction::Boundary(eta) => differentials[x]
                    .terms()
                    .map(|(y, c)| (Monomial::var(index[m][&(y.clone(), eta.clone())]), c.clone()))
                    .collect(),
                GammaAction::Zero => Poly::zero(),
            })
            .collect()
    };
    let faces = (0..=top)
        .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| image(n, &MonotoneMap::coface(n, i))).collect() })
        .collect();
    let degs = (0..=top)
        .map(|n| if n < top { (0..=n).map(|j| image(n, &MonotoneMap::codegeneracy(n, j))).collect() } else { vec![] })
        .collect();
    let free = SimplicialPolynomialAlgebra::new(generators, faces, degs, vec![Vec::new(); top + 1])?;

    let gamma_at = |k: usize, p: &Poly| -> Poly {
        p.terms()
            .map(|(m, c)| (Monomial::var(index[k][&(m.clone(), Surjection::identity(k))]), c.clone()))
            .collect()
    };
    let flat: Vec<(usize, u32, Monomial)> =
        basis.iter().enumerate().flat_map(|(k, b)| b.iter().map(move |(w, x)| (k, *w, x.clone()))).collect();
    let mut relations: Vec<Vec<Poly>> = vec![Vec::new(); top + 1];
    let mut base_relations = 0;
    for (i, (p, wx, x)) in flat.iter().enumerate() {
        for (q, wy, y) in &flat[i..] {
            if p + q > top || wx + wy > max_weight {
                continue;
            }
            let gx = Poly::var(index[*p][&(x.clone(), Surjection::identity(*p))]);
            let gy = Poly::var(index[*q][&(y.clone(), Surjection::identity(*q))]);
            let xy = a.multiply(&Poly::monomial(x.clone()), &Poly::monomial(y.clone()));
            let r = free.ez_product(*p, &gx, *q, &gy)?.sub(&gamma_at(p + q, &xy));
            if r.is_zero() {
                continue;
            }
            base_relations += 1;
            for n in p + q..=top {
                for eta in Surjection::all(n, p + q) {
                    let img = free.operator(&eta.to_map(), &r);
                    if !img.is_zero() {
                        relations[n].push(img);
                    }
                }
            }
        }
    }
    let algebra = free.with_relations(relations)?;
    let model = QuotientModel::new(algebra, max_weight)?;
    Ok(QAlgebra { source: a.clone(), model, keys, index, base_relations })
}

impl QAlgebra {
    pub fn source(&self) -> &FreeCdga {
        &self.source
    }

    pub fn model(&self) -> &QuotientModel {
        &self.model
    }

    pub fn algebra(&self) -> &SimplicialPolynomialAlgebra {
        self.model.algebra()
    }

    pub fn top(&self) -> usize {
        self.model.top()
    }

    pub fn max_weight(&self) -> u32 {
        self.model.max_weight()
    }

    pub fn keys(&self, n: usize) -> &[QKey] {
        &self.keys[n]
    }

    /// Number of nonzero relations `μ̂(Γx, Γy) - Γ(xy)` before closure.
    pub fn base_relation_count(&self) -> usize {
        self.base_relations
    }

    pub fn generator_index(&self, n: usize, x: &Monomial, sigma: &Surjection) -> Option<usize> {
        self.index.get(n)?.get(&(x.clone(), sigma.clone())).copied()
    }

    /// `Γ` of a degree-`k` element of the source: each basis monomial goes
    /// to its generator at the identity surjection, the unit to `1`.
    pub fn gamma(&self, k: usize, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            if m.is_one() {
                out.add_term(Monomial::one(), c.clone());
                continue;
            }
            let g = self.generator_index(k, m, &Surjection::identity(k)).ok_or_else(|| {
                DkError::OutOfRange { degree: self.source.weight(m) as usize, max: self.max_weight() as usize }
            })?;
            out.add_term(Monomial::var(g), c.clone());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{AlgebraSpec, Generator};
    use crate::linear::ChainComplex;
    use crate::simplicial::gamma;

    fn alg(gens: &[(&str, usize, u32)], diff: &[(&str, &str)]) -> FreeCdga {
        let spec = AlgebraSpec {
            generators: gens.iter().map(|(n, d, w)| Generator::new(*n, *d, *w)).collect(),
            differential: diff.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        };
        FreeCdga::from_spec(&spec).unwrap()
    }

    #[test]
    fn ground_field_gives_constants() {
        let q = q_functor(&FreeCdga::ground(), 3, 3).unwrap();
        assert_eq!(q.model().dims(0), vec![1; 4]);
        for w in 1..=3 {
            assert_eq!(q.model().dims(w), vec![0; 4]);
        }
    }

    #[test]
    fn polynomial_ring_in_degree_zero() {
        // every level is K[x] again: one class per weight
        let q = q_functor(&alg(&[("x", 0, 1)], &[]), 3, 3).unwrap();
        for w in 0..=3 {
            assert_eq!(q.model().dims(w), vec![1; 4], "w={w}");
        }
        assert_eq!(q.model().slice(1, 2).monomials.len(), 2);
        q.model().check_identities().unwrap();
    }

    #[test]
    fn odd_circle_matches_free_algebra() {
        let q = q_functor(&alg(&[("x", 1, 1)], &[]), 4, 3).unwrap();
        assert_eq!(q.model().dims(1), vec![0, 1, 2, 3, 4]);
        let free = QuotientModel::new(SimplicialPolynomialAlgebra::free(&gamma(&ChainComplex::sphere(1, 4))), 3).unwrap();
        for w in 0..=3 {
            assert_eq!(q.model().dims(w), free.dims(w));
        }
    }

    #[test]
    fn gamma_of_elements() {
        let a = alg(&[("x", 0, 1), ("xi", 1, 2)], &[("xi", "x^2")]);
        let q = q_functor(&a, 2, 3).unwrap();
        let g = q.gamma(1, &a.parse("x*xi").unwrap()).unwrap();
        assert_eq!(g.len(), 1);
        assert!(q.gamma(0, &a.parse("x^4").unwrap()).is_err());
        q.model().check_identities().unwrap();
    }
}
