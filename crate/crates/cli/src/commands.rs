//! One function per subcommand, each turning the input document into a
//! report.

use std::collections::BTreeMap;

use dk_core::cartesian::{is_fibration_at, is_weak_equivalence, DerivedCartesianSpace, Point};
use dk_core::cdga::{koszul_complex, tor_dimensions, CdgaMorphism, FreeCdga, Monomial, Poly};
use dk_core::linear::{ChainComplex, SparseVec};
use dk_core::scdga::{connectivity_check, face_kernel_ideal_check, induced_theta, q_functor, SimplicialPolynomialAlgebra};
use dk_core::simplicial::{binomial, enumerate_shuffles, gamma, SimplicialVectorSpace};
use dk_core::DkError;

use crate::input::{missing, InputDoc};
use crate::report::*;
use crate::CliError;

pub struct Bounds {
    pub max_degree: usize,
    pub max_weight: u32,
}

fn vector_string(v: &SparseVec) -> String {
    let parts: Vec<String> = v.iter().map(|(i, c)| format!("{c}*e{i}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Bigraded homology of the algebra, or plain homology of the complex when
/// no algebra is given. `through` limits the degrees reported.
pub fn homology(doc: &InputDoc, b: &Bounds, through: Option<usize>) -> Result<Report, CliError> {
    let last = through.unwrap_or(b.max_degree);
    let mut rows = Vec::new();
    if doc.algebra.is_some() {
        let a = doc.algebra()?;
        a.require_weight_graded()?;
        for w in 0..=b.max_weight {
            for n in 0..=last {
                let h = a.homology_bigraded(n, w)?;
                rows.push(HomologyRow {
                    degree: n,
                    weight: Some(w),
                    dimension: h.dimension,
                    representatives: h.representatives.iter().map(|p| a.format(p)).collect(),
                });
            }
        }
    } else {
        let c = doc.complex(b.max_degree)?;
        for n in 0..=last.min(c.top()) {
            let h = c.homology(n)?;
            rows.push(HomologyRow {
                degree: n,
                weight: None,
                dimension: h.dimension,
                representatives: h.representatives.iter().map(vector_string).collect(),
            });
        }
    }
    Ok(Report::Homology(rows))
}

fn space_homotopy(v: &SimplicialVectorSpace, weight: Option<u32>, rows: &mut Vec<HomotopyRow>) -> Result<(), CliError> {
    for k in 0..v.top() {
        rows.push(HomotopyRow {
            degree: k,
            weight,
            normalized: v.homotopy_normalized(k)?.dimension,
            moore: v.homotopy_moore(k)?,
        });
    }
    Ok(())
}

/// Homotopy of a simplicial vector space, or per weight of `Q(A)`, in the
/// degrees below the top level.
pub fn homotopy(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    if doc.algebra.is_some() {
        let q = q_functor(&doc.algebra()?, b.max_degree, b.max_weight)?;
        for w in 0..=b.max_weight {
            space_homotopy(&q.model().simplicial_space(w)?, Some(w), &mut rows)?;
        }
    } else {
        space_homotopy(&doc.simplicial(b.max_degree)?, None, &mut rows)?;
    }
    Ok(Report::Homotopy(rows))
}

pub fn normalize(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    Ok(Report::Normalize(doc.simplicial(b.max_degree)?.normalized_chains()))
}

pub fn gamma_cmd(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let c: ChainComplex = doc.complex(b.max_degree)?.truncated(b.max_degree);
    Ok(Report::Gamma(gamma(&c)))
}

/// Every `(p, q)`-shuffle with `p + q ≤ T`.
pub fn ez_table(b: &Bounds) -> Report {
    let mut out = Vec::new();
    for n in 0..=b.max_degree {
        for p in 0..=n {
            out.extend(enumerate_shuffles(p, n - p));
        }
    }
    Report::EzTable(out)
}

pub fn attach(doc: &InputDoc) -> Result<Report, CliError> {
    let mut a = doc.algebra()?;
    for cell in &doc.cells {
        let z = a.parse(&cell.cycle)?;
        a = a.attach_cell(cell.generator.clone(), &z)?;
    }
    Ok(Report::Attach(a.to_spec()))
}

pub fn koszul(m: usize, b: &Bounds) -> Report {
    let rows: Vec<KoszulRow> = koszul_complex(m, b.max_weight)
        .iter()
        .enumerate()
        .map(|(w, c)| KoszulRow { weight: w as u32, homology: c.homology_dims() })
        .collect();
    let exact = rows.iter().all(|r| r.homology.iter().enumerate().all(|(j, h)| *h == usize::from(r.weight == 0 && j == 0)));
    Report::Koszul(KoszulReport { generators: m, rows, exact })
}

pub fn tor(m: usize) -> Report {
    let dimensions = tor_dimensions(m);
    let binomial: Vec<usize> = (0..=m).map(|j| binomial(m, j)).collect();
    let verdict = dimensions == binomial;
    Report::Tor(TorReport { generators: m, dimensions, binomial, verdict })
}

pub fn q_functor_cmd(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let a = doc.algebra()?;
    let q = q_functor(&a, b.max_degree, b.max_weight)?;
    let alg = q.algebra();
    let generators = (0..=q.top()).map(|n| alg.generators(n).iter().map(|g| g.label.clone()).collect()).collect();
    let relations = (0..=q.top()).map(|n| alg.relations(n).len()).collect();
    let mut dims = Vec::new();
    for w in 0..=b.max_weight {
        for (level, dimension) in q.model().dims(w).into_iter().enumerate() {
            dims.push(LevelDims { level, weight: w, dimension });
        }
    }
    Ok(Report::QFunctor(QFunctorReport { source: a.to_spec(), generators, relations, dims }))
}

pub fn beta_check(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let q = q_functor(&doc.algebra()?, b.max_degree, b.max_weight)?;
    let certificate = q.beta()?;
    let indecomposables = q.indecomposables_table()?;
    let verdict = certificate.verdict && indecomposables.iter().all(|r| r.source_dim == r.target_dim);
    Ok(Report::BetaCheck(BetaReport { certificate, indecomposables, verdict }))
}

/// `θ : Q(A) → Q(A')` adjoint to `β' ∘ f` for `f : A → A'` (the identity
/// when no target is given).
pub fn theta(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let a = doc.algebra()?;
    let f = match doc.target()? {
        None => CdgaMorphism::identity(&a),
        Some(t) => CdgaMorphism::from_spec(a.clone(), t, doc.map.as_ref().ok_or_else(|| missing("map"))?)?,
    };
    let q = q_functor(&a, b.max_degree, b.max_weight)?;
    let q2 = q_functor(f.target(), b.max_degree, b.max_weight)?;
    let mut phi: BTreeMap<Monomial, Poly> = BTreeMap::new();
    for k in 0..=b.max_degree {
        for w in 1..=b.max_weight {
            for x in a.basis(k, w) {
                let image = q2.gamma(k, &f.apply(&Poly::monomial(x.clone())))?;
                phi.insert(x, image);
            }
        }
    }
    let t = induced_theta(&q, q2.model(), &phi)?;
    let (src, dst) = (q.algebra(), q2.algebra());
    let mut images = Vec::new();
    for n in 0..=q.top() {
        for (g, img) in t.images[n].iter().enumerate() {
            images.push(ThetaImage {
                level: n,
                generator: src.generators(n)[g].label.clone(),
                image: dst.format(n, img),
            });
        }
    }
    Ok(Report::Theta(ThetaReport { source: a.to_spec(), target: f.target().to_spec(), images }))
}

/// Connectivity of `B̄^r` for the free simplicial algebra on the input
/// simplicial vector space.
pub fn connectivity(doc: &InputDoc, b: &Bounds, power: u32) -> Result<Report, CliError> {
    let v = doc.simplicial(b.max_degree)?;
    let alg = SimplicialPolynomialAlgebra::free(&v);
    Ok(Report::Connectivity(connectivity_check(&alg, power, b.max_degree, b.max_weight)?))
}

pub fn kernel_ideal(sphere: usize, level: usize, face: usize, b: &Bounds) -> Result<Report, CliError> {
    Ok(Report::KernelIdealCheck(face_kernel_ideal_check(sphere, level, face, b.max_weight)?))
}

pub fn classical_point(doc: &InputDoc) -> Result<Report, CliError> {
    let x = DerivedCartesianSpace::new(doc.algebra()?);
    let report = match &doc.point {
        Some(p) => ClassicalPointReport { point: Some(p.clone()), classical: Some(x.is_classical_point(p)?), locus: None },
        None => {
            let locus = x.enumerate_classical_points()?.ok_or_else(|| {
                DkError::Precondition("classical locus is not enumerable; supply a point".into())
            })?;
            ClassicalPointReport { point: None, classical: None, locus: Some(locus) }
        }
    };
    Ok(Report::ClassicalPoint(report))
}

pub fn tangent(doc: &InputDoc) -> Result<Report, CliError> {
    let x = DerivedCartesianSpace::new(doc.algebra()?);
    Ok(Report::Tangent(x.tangent_complex(doc.point()?)?))
}

/// The algebra map `f : algebra → target`; geometrically a map from the
/// space of `target` to the space of `algebra`.
fn morphism(doc: &InputDoc) -> Result<CdgaMorphism, CliError> {
    let b = doc.algebra()?;
    let a = doc.target()?.ok_or_else(|| missing("target"))?;
    Ok(CdgaMorphism::from_spec(b, a, doc.map.as_ref().ok_or_else(|| missing("map"))?)?)
}

fn points_of(given: &Option<Vec<Point>>, a: &FreeCdga) -> Result<Vec<Point>, CliError> {
    match given {
        Some(ps) => Ok(ps.clone()),
        None => Ok(DerivedCartesianSpace::new(a.clone()).enumerate_classical_points()?.ok_or_else(|| {
            DkError::Precondition("classical locus is not enumerable; supply the points".into())
        })?),
    }
}

pub fn weq_check(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let f = morphism(doc)?;
    let source_points = points_of(&doc.source_points, f.target())?;
    let target_points = points_of(&doc.target_points, f.source())?;
    let geometric = is_weak_equivalence(&f, &source_points, &target_points)?;
    let algebraic = if f.source().is_weight_graded() && f.target().is_weight_graded() {
        Some(f.is_quasi_iso(b.max_weight)?)
    } else {
        None
    };
    Ok(Report::WeqCheck(WeqReport { geometric, algebraic }))
}

pub fn fibration_check(doc: &InputDoc) -> Result<Report, CliError> {
    let f = morphism(doc)?;
    let p = doc.point()?;
    Ok(Report::FibrationCheck(FibrationReport { point: p.clone(), fibration: is_fibration_at(&f, p)? }))
}

pub fn forms(doc: &InputDoc, b: &Bounds) -> Result<Report, CliError> {
    let x = DerivedCartesianSpace::new(doc.algebra()?);
    Ok(Report::Forms(x.differential_forms_generators(doc.point.as_ref(), b.max_degree, b.max_weight)?))
}
