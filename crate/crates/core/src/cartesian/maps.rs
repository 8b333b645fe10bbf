//! Maps of derived Cartesian spaces, given dually as algebra maps
//! `f : B → A` (so the geometric map goes from the space of `A` to that of
//! `B`).

use serde::{Deserialize, Serialize};

use super::space::{DerivedCartesianSpace, Point, TangentComplex};
use crate::cdga::CdgaMorphism;
use crate::error::{DkError, Result};
use crate::linear::{ChainMap, Matrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointComparison {
    pub source_point: Point,
    pub target_point: Point,
    pub source_tangent: Vec<usize>,
    pub target_tangent: Vec<usize>,
    pub quasi_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakEquivalenceReport {
    /// Pullback along the map is a bijection between the supplied lists.
    pub bijection: bool,
    /// Source points whose pullback is not in the target list.
    pub unmatched_source: Vec<Point>,
    /// Target points hit by no source point or by more than one.
    pub unmatched_target: Vec<Point>,
    pub points: Vec<PointComparison>,
    /// The verdict is relative to the supplied rational points; the caller
    /// asserts that they exhaust both classical loci.
    pub completeness_asserted: bool,
    pub verdict: bool,
}

/// The geometric map dual to an algebra map, at the level of points and
/// tangent complexes.
pub struct GeometricMap<'a> {
    f: &'a CdgaMorphism,
    source: DerivedCartesianSpace,
    target: DerivedCartesianSpace,
}

impl<'a> GeometricMap<'a> {
    /// `f : B → A`; the geometric source is the space of `A`.
    pub fn new(f: &'a CdgaMorphism) -> Self {
        GeometricMap {
            f,
            source: DerivedCartesianSpace::new(f.target().clone()),
            target: DerivedCartesianSpace::new(f.source().clone()),
        }
    }

    pub fn source(&self) -> &DerivedCartesianSpace {
        &self.source
    }

    pub fn target(&self) -> &DerivedCartesianSpace {
        &self.target
    }

    /// `P ∘ f` on the degree-0 generators of `B`.
    pub fn pullback(&self, p: &Point) -> Result<Point> {
        let vals = self.source.values(p)?;
        let b = self.f.source();
        Ok(self
            .target
            .generators_of_degree(0)
            .into_iter()
            .map(|g| (b.name(g), self.f.image(g).evaluate(&vals).expect("degree-0 image")))
            .collect())
    }

    /// Linearization of `f` at `p`: for each degree `j`, the matrix from
    /// degree-`j` generators of `A` to degree-`j` generators of `B`.
    pub fn linearization(&self, p: &Point, amplitude: usize) -> Result<Vec<Matrix>> {
        let shift = self.source.shift(p)?;
        let parity = self.f.target().parity();
        Ok((0..=amplitude)
            .map(|j| {
                let cols = self.source.generators_of_degree(j);
                let rows: Vec<SparseVec> = self
                    .target
                    .generators_of_degree(j)
                    .into_iter()
                    .map(|g| self.source.linear_row(&self.f.image(g).substitute(&shift, parity), &cols))
                    .collect();
                Matrix::from_rows(cols.len(), &rows)
            })
            .collect())
    }

    /// Tangent complexes at `p` and `f^*p` and the map between them as a
    /// chain map of the reindexed complexes.
    pub fn tangent_map(&self, p: &Point) -> Result<(TangentComplex, TangentComplex, ChainMap)> {
        let q = self.pullback(p)?;
        let amp = self.source.amplitude().max(self.target.amplitude());
        let ts = self.source.tangent_complex_to(p, amp)?;
        let tt = self.target.tangent_complex_to(&q, amp)?;
        let lin = self.linearization(p, amp)?;
        let comps = (0..=amp).map(|k| lin[amp - k].clone()).collect();
        let map = ChainMap::new(ts.as_chain_complex(), tt.as_chain_complex(), comps)?;
        Ok((ts, tt, map))
    }

    /// Bijection on the supplied classical points plus a quasi-isomorphism
    /// of tangent complexes at each matched pair.
    pub fn is_weak_equivalence(&self, source_points: &[Point], target_points: &[Point]) -> Result<WeakEquivalenceReport> {
        for p in source_points {
            self.source.require_classical(p)?;
        }
        for p in target_points {
            self.target.require_classical(p)?;
        }
        let mut hits = vec![0usize; target_points.len()];
        let mut unmatched_source = Vec::new();
        let mut points = Vec::new();
        for p in source_points {
            let q = self.pullback(p)?;
            match target_points.iter().position(|t| *t == q) {
                None => unmatched_source.push(p.clone()),
                Some(i) => {
                    hits[i] += 1;
                    let (ts, tt, map) = self.tangent_map(p)?;
                    let quasi_iso = map.is_quasi_iso(map.source().top())?.verdict;
                    points.push(PointComparison {
                        source_point: p.clone(),
                        target_point: q,
                        source_tangent: ts.cohomology,
                        target_tangent: tt.cohomology,
                        quasi_iso,
                    });
                }
            }
        }
        let unmatched_target: Vec<Point> =
            target_points.iter().zip(&hits).filter(|(_, h)| **h != 1).map(|(t, _)| t.clone()).collect();
        let bijection = unmatched_source.is_empty() && unmatched_target.is_empty();
        let verdict = bijection && points.iter().all(|c| c.quasi_iso);
        Ok(WeakEquivalenceReport {
            bijection,
            unmatched_source,
            unmatched_target,
            points,
            completeness_asserted: true,
            verdict,
        })
    }

    /// Surjectivity of the linearized map in every degree at a classical
    /// point of the source.
    pub fn is_fibration_at(&self, p: &Point) -> Result<bool> {
        self.source.require_classical(p)?;
        let amp = self.source.amplitude().max(self.target.amplitude());
        Ok(self.linearization(p, amp)?.iter().all(|m| m.rank() == m.rows()))
    }
}

/// Free-function form of [`GeometricMap::is_weak_equivalence`].
pub fn is_weak_equivalence(
    f: &CdgaMorphism,
    source_points: &[Point],
    target_points: &[Point],
) -> Result<WeakEquivalenceReport> {
    GeometricMap::new(f).is_weak_equivalence(source_points, target_points)
}

/// Free-function form of [`GeometricMap::is_fibration_at`].
pub fn is_fibration_at(f: &CdgaMorphism, p: &Point) -> Result<bool> {
    GeometricMap::new(f).is_fibration_at(p)
}

/// Checks that the tangent map of `g ∘ f` is the product of the tangent
/// maps, at `p` in the source of the geometric composite.
pub fn tangent_functoriality(f: &CdgaMorphism, g: &CdgaMorphism, p: &Point) -> Result<bool> {
    // geometric composite goes (space of f's target) -> (f's source) -> (g's source)
    let gf = g.then(f)?;
    let fm = GeometricMap::new(f);
    let gm = GeometricMap::new(g);
    let comp = GeometricMap::new(&gf);
    let amp = [fm.source.amplitude(), fm.target.amplitude(), gm.target.amplitude()].into_iter().max().unwrap_or(0);
    let lf = fm.linearization(p, amp)?;
    let lg = gm.linearization(&fm.pullback(p)?, amp)?;
    let lc = comp.linearization(p, amp)?;
    if comp.pullback(p)? != gm.pullback(&fm.pullback(p)?)? {
        return Err(DkError::Precondition("pullbacks do not compose".into()));
    }
    Ok((0..=amp).all(|j| lc[j] == lg[j].mul(&lf[j])))
}
