//! Maps of semifree DG algebras, given on generators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::FreeCdga;
use super::poly::Poly;
use crate::error::{DkError, Result};
use crate::linear::{ChainMap, Matrix, QuasiIsoReport};

/// Serialized form: generator name of the source to a polynomial string in
/// the target.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub images: BTreeMap<String, String>,
}

/// Per-weight quasi-isomorphism reports of a weight-preserving map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedQuasiIsoReport {
    pub weights: BTreeMap<u32, QuasiIsoReport>,
    pub verdict: bool,
}

/// Algebra map commuting with the differentials, determined by the images
/// of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgaMorphism {
    source: FreeCdga,
    target: FreeCdga,
    images: Vec<Poly>,
}

impl CdgaMorphism {
    /// Checks degrees, weights (when both sides are weight graded) and
    /// `f(dg) = d f(g)` on every generator.
    pub fn new(source: FreeCdga, target: FreeCdga, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(DkError::Dimension("one image per source generator required".into()));
        }
        let weighted = source.is_weight_graded() && target.is_weight_graded();
        for (i, img) in images.iter().enumerate() {
            let g = source.generator(i);
            if img.variables().iter().any(|v| *v >= target.len()) {
                return Err(DkError::Dimension("image uses an unknown target generator".into()));
            }
            let degs = img.gradings(|v| target.generator(v).degree);
            if !degs.is_empty() && degs != [g.degree] {
                return Err(DkError::Homogeneity(format!(
                    "image of `{}` must have degree {}",
                    g.name, g.degree
                )));
            }
            let wts = img.gradings(|v| target.generator(v).weight as usize);
            if weighted && !wts.is_empty() && wts != [g.weight as usize] {
                return Err(DkError::Homogeneity(format!(
                    "image of `{}` must have weight {}",
                    g.name, g.weight
                )));
            }
        }
        let f = CdgaMorphism { source, target, images };
        for i in 0..f.source.len() {
            let lhs = f.apply(f.source.generator_differential(i));
            let rhs = f.target.differential(&f.images[i]);
            if lhs != rhs {
                return Err(DkError::NotChainMap(format!(
                    "f(d {}) = {} but d f({}) = {}",
                    f.source.name(i),
                    f.target.format(&lhs),
                    f.source.name(i),
                    f.target.format(&rhs)
                )));
            }
        }
        Ok(f)
    }

    /// Unlisted generators are an error.
    pub fn from_spec(source: FreeCdga, target: FreeCdga, spec: &MorphismSpec) -> Result<Self> {
        for name in spec.images.keys() {
            if source.index_of(name).is_none() {
                return Err(DkError::UnknownGenerator(name.clone()));
            }
        }
        let images = source
            .generators()
            .iter()
            .map(|g| {
                let text = spec.images.get(&g.name).ok_or_else(|| DkError::MissingAssignment(g.name.clone()))?;
                target.parse(text)
            })
            .collect::<Result<Vec<_>>>()?;
        CdgaMorphism::new(source, target, images)
    }

    pub fn to_spec(&self) -> MorphismSpec {
        MorphismSpec {
            images: self
                .source
                .generators()
                .iter()
                .zip(&self.images)
                .map(|(g, p)| (g.name.clone(), self.target.format(p)))
                .collect(),
        }
    }

    pub fn identity(a: &FreeCdga) -> Self {
        let images = (0..a.len()).map(Poly::var).collect();
        CdgaMorphism::new(a.clone(), a.clone(), images).expect("identity")
    }

    /// The map sending each source generator to the target generator of the
    /// same name.
    pub fn inclusion(source: &FreeCdga, target: &FreeCdga) -> Result<Self> {
        let images = source
            .generators()
            .iter()
            .map(|g| target.index_of(&g.name).map(Poly::var).ok_or_else(|| DkError::UnknownGenerator(g.name.clone())))
            .collect::<Result<Vec<_>>>()?;
        CdgaMorphism::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &FreeCdga {
        &self.source
    }

    pub fn target(&self) -> &FreeCdga {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        p.substitute(&self.images, self.target.parity())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CdgaMorphism) -> Result<CdgaMorphism> {
        if self.target != other.source {
            return Err(DkError::Dimension("maps are not composable".into()));
        }
        let images = self.images.iter().map(|p| other.apply(p)).collect();
        CdgaMorphism::new(self.source.clone(), other.target.clone(), images)
    }

    /// The weight-`w` component as a map of complete complexes of equal
    /// length.
    pub fn weight_map(&self, w: u32) -> Result<ChainMap> {
        let s = self.source.weight_slice(w)?;
        let t = self.target.weight_slice(w)?;
        let top = s.complex.top().max(t.complex.top());
        let comps = (0..=top)
            .map(|k| {
                if k > s.complex.top() {
                    return Ok(Matrix::zero(t.bases.get(k).map_or(0, Vec::len), 0));
                }
                let cols = s.bases[k]
                    .iter()
                    .map(|m| {
                        let img = self.apply(&Poly::monomial(m.clone()));
                        if k > t.complex.top() {
                            return if img.is_zero() {
                                Ok(Default::default())
                            } else {
                                Err(DkError::Homogeneity("image outside the target slice".into()))
                            };
                        }
                        t.coordinates(k, &img)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(t.bases.get(k).map_or(0, Vec::len), cols))
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(s.complex.padded(top)?, t.complex.padded(top)?, comps)
    }

    /// Quasi-isomorphism test in every degree of weights `0..=max_weight`.
    pub fn is_quasi_iso(&self, max_weight: u32) -> Result<WeightedQuasiIsoReport> {
        let mut weights = BTreeMap::new();
        let mut verdict = true;
        for w in 0..=max_weight {
            let f = self.weight_map(w)?;
            let top = f.source().top();
            let r = f.is_quasi_iso(top)?;
            verdict &= r.verdict;
            weights.insert(w, r);
        }
        Ok(WeightedQuasiIsoReport { weights, verdict })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{AlgebraSpec, Generator};

    fn alg(gens: &[(&str, usize, u32)], diff: &[(&str, &str)]) -> FreeCdga {
        let spec = AlgebraSpec {
            generators: gens.iter().map(|(n, d, w)| Generator::new(*n, *d, *w)).collect(),
            differential: diff.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        };
        FreeCdga::from_spec(&spec).unwrap()
    }

    fn map(s: &FreeCdga, t: &FreeCdga, images: &[(&str, &str)]) -> Result<CdgaMorphism> {
        let spec = MorphismSpec { images: images.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect() };
        CdgaMorphism::from_spec(s.clone(), t.clone(), &spec)
    }

    #[test]
    fn acyclic_pair_collapse_is_quasi_iso() {
        let a = alg(&[("x", 0, 1), ("xi", 1, 1)], &[("xi", "x")]);
        let k = FreeCdga::ground();
        let f = map(&a, &k, &[("x", "0"), ("xi", "0")]).unwrap();
        assert!(f.is_quasi_iso(4).unwrap().verdict);
    }

    #[test]
    fn fat_point_is_not_a_point() {
        let a = alg(&[("x", 0, 1), ("xi", 1, 2)], &[("xi", "x^2")]);
        let k = FreeCdga::ground();
        let f = map(&a, &k, &[("x", "0"), ("xi", "0")]).unwrap();
        let r = f.is_quasi_iso(3).unwrap();
        assert!(!r.verdict);
        assert!(r.weights[&0].verdict);
        assert!(!r.weights[&1].verdict);
    }

    #[test]
    fn rejects_non_chain_maps() {
        let a = alg(&[("x", 0, 1), ("xi", 1, 1)], &[("xi", "x")]);
        let b = alg(&[("x", 0, 1), ("xi", 1, 1)], &[]);
        assert!(matches!(map(&a, &b, &[("x", "x"), ("xi", "xi")]), Err(DkError::NotChainMap(_))));
        assert!(matches!(map(&a, &b, &[("x", "x")]), Err(DkError::MissingAssignment(_))));
        assert!(matches!(map(&a, &b, &[("x", "xi"), ("xi", "0")]), Err(DkError::Homogeneity(_))));
    }

    #[test]
    fn composition_and_identity() {
        let a = alg(&[("x", 0, 1), ("y", 1, 1), ("z", 2, 2)], &[("z", "x*y")]);
        let id = CdgaMorphism::identity(&a);
        assert_eq!(id.then(&id).unwrap(), id);
        assert!(id.is_quasi_iso(3).unwrap().verdict);
        let spec_roundtrip = CdgaMorphism::from_spec(a.clone(), a.clone(), &id.to_spec()).unwrap();
        assert_eq!(spec_roundtrip, id);
    }
}
