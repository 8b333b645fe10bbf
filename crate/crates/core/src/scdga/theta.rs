//! The algebra map `θ : Q(A) → B` adjoint to a DG algebra map
//! `φ : A → N B`, defined on Q-generators by `θ(Γx·η) = η^*(φ(x))`.

use std::collections::BTreeMap;

use super::qfunctor::QAlgebra;
use super::quotient::QuotientModel;
use crate::cdga::{Monomial, Poly};
use crate::error::{DkError, Result};

/// Images of the Q-generators of each level, as polynomials in the
/// target's generators of the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMap {
    pub images: Vec<Vec<Poly>>,
}

impl ThetaMap {
    /// Applies `θ` to a level-`n` polynomial of `Q(A)`.
    pub fn apply(&self, n: usize, p: &Poly) -> Poly {
        p.substitute(&self.images[n], &[])
    }
}

/// Extends images of the source generators to every basis monomial of
/// the source by shuffle products, factors taken in canonical order.
pub fn multiplicative_extension(
    q: &QAlgebra,
    target: &QuotientModel,
    generator_images: &[Poly],
) -> Result<BTreeMap<Monomial, Poly>> {
    let a = q.source();
    if generator_images.len() != a.len() {
        return Err(DkError::Dimension("one image per source generator required".into()));
    }
    let b = target.algebra();
    let mut out = BTreeMap::new();
    for k in 0..=q.top() {
        for w in 1..=q.max_weight() {
            for x in a.basis(k, w) {
                let mut acc = Poly::one();
                let mut level = 0;
                for g in x.expanded() {
                    let d = a.generator(g).degree;
                    acc = b.ez_product(level, &acc, d, &generator_images[g])?;
                    level += d;
                }
                out.insert(x, acc);
            }
        }
    }
    Ok(out)
}

/// Builds `θ` from `φ`, given on every basis monomial of the source with
/// positive weight, and verifies that `φ` lands in normalized chains,
/// commutes with the differentials, and that `θ` kills every relation of
/// `Q(A)` modulo the relations of the target.
pub fn induced_theta(q: &QAlgebra, target: &QuotientModel, phi: &BTreeMap<Monomial, Poly>) -> Result<ThetaMap> {
    let a = q.source();
    let b = target.algebra();
    if target.top() < q.top() || target.max_weight() < q.max_weight() {
        return Err(DkError::Dimension("target model is smaller than the source truncation".into()));
    }
    let image_of = |x: &Monomial| -> Result<&Poly> {
        phi.get(x).ok_or_else(|| DkError::MissingAssignment(a.format_monomial(x)))
    };
    for k in 0..=q.top() {
        for w in 1..=q.max_weight() {
            for x in a.basis(k, w) {
                let px = image_of(&x)?;
                let name = a.format_monomial(&x);
                match b.weights_of(k, px).as_slice() {
                    [] => {}
                    [v] if *v == w => {}
                    _ => return Err(DkError::Homogeneity(format!("image of {name} must have weight {w}"))),
                }
                if k == 0 {
                    continue;
                }
                for i in 1..=k {
                    if !target.is_zero(k - 1, &b.face(k, i, px))? {
                        return Err(DkError::NotChainMap(format!("image of {name} is not normalized: d_{i} ≠ 0")));
                    }
                }
                let mut phi_dx = Poly::zero();
                for (y, c) in a.differential(&Poly::monomial(x.clone())).terms() {
                    phi_dx.add_scaled(c, image_of(y)?);
                }
                if !target.is_zero(k - 1, &b.face(k, 0, px).sub(&phi_dx))? {
                    return Err(DkError::NotChainMap(format!("d_0 φ({name}) ≠ φ(d {name})")));
                }
            }
        }
    }
    let images = (0..=q.top())
        .map(|n| {
            q.keys(n)
                .iter()
                .map(|(x, sigma)| Ok(b.operator(&sigma.to_map(), image_of(x)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let theta = ThetaMap { images };
    let qa = q.algebra();
    for n in 0..=q.top() {
        for r in qa.relations(n) {
            if !target.is_zero(n, &theta.apply(n, r))? {
                return Err(DkError::NotMultiplicative(format!(
                    "relation {} at level {n} is not annihilated",
                    qa.format(n, r)
                )));
            }
        }
        // compatibility with the structure maps on generators
        for g in 0..qa.generators(n).len() {
            let x = Poly::var(g);
            for i in (0..=n).filter(|_| n > 0) {
                let lhs = theta.apply(n - 1, &qa.face(n, i, &x));
                let rhs = b.face(n, i, &theta.images[n][g]);
                if !target.is_zero(n - 1, &lhs.sub(&rhs))? {
                    return Err(DkError::NotChainMap(format!("θ does not commute with d_{i} at level {n}")));
                }
            }
            if n < q.top() {
                for j in 0..=n {
                    let lhs = theta.apply(n + 1, &qa.degeneracy(n, j, &x));
                    let rhs = b.degeneracy(n, j, &theta.images[n][g]);
                    if !target.is_zero(n + 1, &lhs.sub(&rhs))? {
                        return Err(DkError::NotChainMap(format!("θ does not commute with s_{j} at level {n}")));
                    }
                }
            }
        }
    }
    Ok(theta)
}
