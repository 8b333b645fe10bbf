//! Levelwise polynomial simplicial commutative algebras.

use serde::{Deserialize, Serialize};

use crate::cdga::{format_poly, Monomial, Poly};
use crate::error::{DkError, Result};
use crate::simplicial::simplex::{operator_steps, MonotoneMap, Step};
use crate::simplicial::{enumerate_shuffles, SimplicialVectorSpace};

/// A polynomial generator of one level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelGenerator {
    pub label: String,
    pub weight: u32,
}

/// Simplicial commutative algebra, truncated at level `top`, with level `n`
/// a polynomial ring on `generators[n]` modulo the ideal generated by
/// `relations[n]`. Face and degeneracy maps are ring maps given by the
/// images of generators. The relation family must be closed under the
/// structure maps up to the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPolynomialAlgebra {
    generators: Vec<Vec<LevelGenerator>>,
    /// `faces[n][i][g]`: `d_i` of generator `g` of level `n`.
    faces: Vec<Vec<Vec<Poly>>>,
    /// `degeneracies[n][j][g]`: `s_j` of generator `g` of level `n`.
    degeneracies: Vec<Vec<Vec<Poly>>>,
    relations: Vec<Vec<Poly>>,
}

impl SimplicialPolynomialAlgebra {
    /// Validates shapes and weights, and the simplicial identities on
    /// generators exactly. Algebras whose identities hold only modulo the
    /// relations are built with [`Self::new_unchecked`] and checked through
    /// their quotient model.
    pub fn new(
        generators: Vec<Vec<LevelGenerator>>,
        faces: Vec<Vec<Vec<Poly>>>,
        degeneracies: Vec<Vec<Vec<Poly>>>,
        relations: Vec<Vec<Poly>>,
    ) -> Result<Self> {
        let a = SimplicialPolynomialAlgebra::new_unchecked(generators, faces, degeneracies, relations)?;
        a.check_identities_on_generators()?;
        Ok(a)
    }

    /// Validates shapes, variable ranges and weight homogeneity only.
    pub fn new_unchecked(
        generators: Vec<Vec<LevelGenerator>>,
        faces: Vec<Vec<Vec<Poly>>>,
        degeneracies: Vec<Vec<Vec<Poly>>>,
        relations: Vec<Vec<Poly>>,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(DkError::Simplicial("need at least level 0".into()));
        }
        let top = generators.len() - 1;
        let bad = |m: String| Err(DkError::Simplicial(m));
        if faces.len() != top + 1 || degeneracies.len() != top + 1 || relations.len() != top + 1 {
            return bad(format!("expected data for levels 0..={top}"));
        }
        if generators.iter().flatten().any(|g| g.weight == 0) {
            return bad("generator weights must be positive".into());
        }
        let a = SimplicialPolynomialAlgebra { generators, faces, degeneracies, relations };
        for n in 0..=top {
            let nf = if n == 0 { 0 } else { n + 1 };
            let ns = if n < top { n + 1 } else { 0 };
            if a.faces[n].len() != nf || a.degeneracies[n].len() != ns {
                return bad(format!("level {n} needs {nf} faces and {ns} degeneracies"));
            }
            for (maps, to) in [(&a.faces[n], n.wrapping_sub(1)), (&a.degeneracies[n], n + 1)] {
                for images in maps.iter() {
                    if images.len() != a.generators[n].len() {
                        return bad(format!("level {n}: one image per generator required"));
                    }
                    for (g, img) in images.iter().enumerate() {
                        a.check_level_poly(to, img)?;
                        match a.weights_of(to, img).as_slice() {
                            [] => {}
                            [w] if *w == a.generators[n][g].weight => {}
                            _ => return bad(format!("level {n}: a structure map changes the weight of generator {g}")),
                        }
                    }
                }
            }
            for r in &a.relations[n] {
                a.check_level_poly(n, r)?;
                if a.weights_of(n, r).len() > 1 {
                    return Err(DkError::Homogeneity(format!("relation at level {n} is not weight-homogeneous")));
                }
            }
        }
        Ok(a)
    }

    /// Replaces the relation family, validating it like [`Self::new_unchecked`].
    pub fn with_relations(self, relations: Vec<Vec<Poly>>) -> Result<Self> {
        SimplicialPolynomialAlgebra::new_unchecked(self.generators, self.faces, self.degeneracies, relations)
    }

    fn check_level_poly(&self, n: usize, p: &Poly) -> Result<()> {
        let count = self.generators.get(n).map_or(0, Vec::len);
        if p.variables().iter().any(|v| *v >= count) {
            return Err(DkError::Simplicial(format!("polynomial uses an unknown generator of level {n}")));
        }
        Ok(())
    }

    /// Distinct term weights of a level polynomial.
    pub fn weights_of(&self, n: usize, p: &Poly) -> Vec<u32> {
        p.gradings(|v| self.generators[n][v].weight as usize).into_iter().map(|w| w as u32).collect()
    }

    /// The free algebra on a simplicial vector space: level `n` is the
    /// polynomial ring on a basis of `v_n`, structure maps extended
    /// multiplicatively. Weights come from `v` (default 1).
    pub fn free(v: &SimplicialVectorSpace) -> Self {
        let top = v.top();
        let generators = (0..=top)
            .map(|n| {
                (0..v.dim(n))
                    .map(|b| LevelGenerator {
                        label: v
                            .levels()
                            .labels
                            .as_ref()
                            .map_or_else(|| format!("b{n}_{b}"), |l| l[n][b].clone()),
                        weight: v.levels().weight(n, b),
                    })
                    .collect()
            })
            .collect();
        let linear = |m: &crate::linear::Matrix| -> Vec<Poly> {
            (0..m.cols())
                .map(|c| m.column(c).iter().map(|(r, x)| (Monomial::var(r), x.clone())).collect())
                .collect()
        };
        let faces = (0..=top)
            .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| linear(v.face(n, i))).collect() })
            .collect();
        let degs = (0..=top)
            .map(|n| if n < top { (0..=n).map(|j| linear(v.degeneracy(n, j))).collect() } else { vec![] })
            .collect();
        SimplicialPolynomialAlgebra::new_unchecked(generators, faces, degs, vec![Vec::new(); top + 1])
            .expect("free algebra on a simplicial space")
    }

    /// The constant algebra `K` (no generators) through level `top`.
    pub fn constant(top: usize) -> Self {
        SimplicialPolynomialAlgebra::free(&SimplicialVectorSpace::constant(0, top))
    }

    pub fn top(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn generators(&self, n: usize) -> &[LevelGenerator] {
        &self.generators[n]
    }

    pub fn face_images(&self, n: usize, i: usize) -> &[Poly] {
        &self.faces[n][i]
    }

    pub fn degeneracy_images(&self, n: usize, j: usize) -> &[Poly] {
        &self.degeneracies[n][j]
    }

    pub fn relations(&self, n: usize) -> &[Poly] {
        &self.relations[n]
    }

    pub fn has_relations(&self) -> bool {
        self.relations.iter().any(|r| !r.is_empty())
    }

    /// Whether every structure map sends generators to linear combinations
    /// of generators.
    pub fn has_linear_structure_maps(&self) -> bool {
        self.faces
            .iter()
            .chain(&self.degeneracies)
            .flatten()
            .flatten()
            .all(|p| p.terms().all(|(m, _)| m.length() == 1))
    }

    pub fn weight(&self, n: usize, m: &Monomial) -> u32 {
        m.grading(|v| self.generators[n][v].weight as usize) as u32
    }

    pub fn format(&self, n: usize, p: &Poly) -> String {
        format_poly(p, &|v| self.generators[n][v].label.clone())
    }

    pub fn face(&self, n: usize, i: usize, p: &Poly) -> Poly {
        p.substitute(&self.faces[n][i], &[])
    }

    pub fn degeneracy(&self, n: usize, j: usize, p: &Poly) -> Poly {
        p.substitute(&self.degeneracies[n][j], &[])
    }

    /// `θ^*` for a monotone `θ : [m] -> [n]`, applied to a level-`n`
    /// polynomial.
    pub fn operator(&self, theta: &MonotoneMap, p: &Poly) -> Poly {
        let mut level = theta.target();
        let mut acc = p.clone();
        for step in operator_steps(theta) {
            match step {
                Step::Face(i) => {
                    acc = self.face(level, i, &acc);
                    level -= 1;
                }
                Step::Degeneracy(j) => {
                    acc = self.degeneracy(level, j, &acc);
                    level += 1;
                }
            }
        }
        acc
    }

    /// Applies `s_{j_1}` first, then `s_{j_2}`, ... for increasing `js`.
    fn degenerate(&self, mut level: usize, js: &[usize], p: &Poly) -> Poly {
        let mut acc = p.clone();
        for j in js {
            acc = self.degeneracy(level, *j, &acc);
            level += 1;
        }
        acc
    }

    /// Shuffle product of `x` (level `p`) and `y` (level `q`) in level
    /// `p + q`: `Σ sign(α, β) s_β(x) · s_α(y)` over `(p, q)`-shuffles.
    pub fn ez_product(&self, p: usize, x: &Poly, q: usize, y: &Poly) -> Result<Poly> {
        if p + q > self.top() {
            return Err(DkError::OutOfRange { degree: p + q, max: self.top() });
        }
        let mut out = Poly::zero();
        for sh in enumerate_shuffles(p, q) {
            let sx = self.degenerate(p, &sh.second, x);
            let sy = self.degenerate(q, &sh.first, y);
            let term = sx.mul(&sy, &[]);
            let sign = crate::linear::Scalar::from_int(sh.sign as i64);
            out.add_scaled(&sign, &term);
        }
        Ok(out)
    }

    /// Exact check of every simplicial identity on generators.
    pub fn check_identities_on_generators(&self) -> Result<()> {
        for id in self.identities() {
            for g in 0..self.generators[id.level].len() {
                let x = Poly::var(g);
                if (id.lhs)(self, &x) != (id.rhs)(self, &x) {
                    return Err(DkError::Simplicial(format!("{} fails on generator {g} of level {}", id.name, id.level)));
                }
            }
        }
        Ok(())
    }

    /// Every simplicial identity as a pair of composite operators from
    /// level `level` to level `target_level`.
    pub(crate) fn identities(&self) -> Vec<Identity> {
        let top = self.top();
        let mut out = Vec::new();
        for n in 2..=top {
            for j in 1..=n {
                for i in 0..j {
                    out.push(Identity {
                        level: n,
                        target_level: n - 2,
                        lhs: Box::new(move |a, x| a.face(n - 1, i, &a.face(n, j, x))),
                        rhs: Box::new(move |a, x| a.face(n - 1, j - 1, &a.face(n, i, x))),
                        name: format!("d_{i} d_{j} = d_{} d_{i}", j - 1),
                    });
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    out.push(Identity {
                        level: n,
                        target_level: n + 2,
                        lhs: Box::new(move |a, x| a.degeneracy(n + 1, i, &a.degeneracy(n, j, x))),
                        rhs: Box::new(move |a, x| a.degeneracy(n + 1, j + 1, &a.degeneracy(n, i, x))),
                        name: format!("s_{i} s_{j} = s_{} s_{i}", j + 1),
                    });
                }
            }
        }
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let rhs: OperatorFn = if i < j {
                        if n == 0 {
                            continue;
                        }
                        Box::new(move |a, x| a.degeneracy(n - 1, j - 1, &a.face(n, i, x)))
                    } else if i == j || i == j + 1 {
                        Box::new(|_, x| x.clone())
                    } else {
                        if n == 0 {
                            continue;
                        }
                        Box::new(move |a, x| a.degeneracy(n - 1, j, &a.face(n, i - 1, x)))
                    };
                    out.push(Identity {
                        level: n,
                        target_level: n,
                        lhs: Box::new(move |a, x| a.face(n + 1, i, &a.degeneracy(n, j, x))),
                        rhs,
                        name: format!("d_{i} s_{j}"),
                    });
                }
            }
        }
        out
    }
}

type OperatorFn = Box<dyn Fn(&SimplicialPolynomialAlgebra, &Poly) -> Poly + Send + Sync>;

/// One simplicial identity `lhs = rhs` between operators on level `level`.
pub(crate) struct Identity {
    pub level: usize,
    pub target_level: usize,
    pub lhs: OperatorFn,
    pub rhs: OperatorFn,
    pub name: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::ChainComplex;
    use crate::simplicial::gamma;

    #[test]
    fn free_on_gamma_of_circle() {
        let a = SimplicialPolynomialAlgebra::free(&gamma(&ChainComplex::sphere(1, 4)));
        for n in 0..=4 {
            assert_eq!(a.generators(n).len(), n);
        }
        a.check_identities_on_generators().unwrap();
    }

    #[test]
    fn constant_algebra() {
        let k = SimplicialPolynomialAlgebra::constant(3);
        assert!(k.generators(2).is_empty());
        assert_eq!(k.ez_product(1, &Poly::one(), 1, &Poly::one()).unwrap(), Poly::zero());
        assert_eq!(k.ez_product(0, &Poly::one(), 2, &Poly::one()).unwrap(), Poly::one());
    }

    #[test]
    fn shuffle_product_in_degree_one() {
        let a = SimplicialPolynomialAlgebra::free(&gamma(&ChainComplex::sphere(1, 3)));
        let x = Poly::var(0);
        let xy = a.ez_product(1, &x, 1, &x).unwrap();
        // s_1 x · s_0 x − s_0 x · s_1 x vanishes in a commutative ring
        assert!(xy.is_zero());
        let s1x = a.degeneracy(1, 1, &x);
        let s0x = a.degeneracy(1, 0, &x);
        assert_ne!(s1x, s0x);
        assert!(a.ez_product(2, &s1x, 2, &s0x).is_err());
    }
}
