//! Connectivity of powers of the augmentation ideal of a reduced free
//! simplicial algebra, and generators for kernels of face maps.

use serde::{Deserialize, Serialize};

use super::algebra::SimplicialPolynomialAlgebra;
use super::quotient::{monomials_of_weight, QuotientModel};
use crate::cdga::Poly;
use crate::error::{DkError, Result};
use crate::linear::{ChainComplex, Echelon, SparseVec};
use crate::simplicial::{gamma_with_levels, Surjection};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyRow {
    pub degree: usize,
    pub weight: u32,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub power: u32,
    /// Degrees `0..=checked_through` were inspected; `None` when the range
    /// is empty.
    pub checked_through: Option<usize>,
    pub rows: Vec<HomotopyRow>,
    pub verdict: bool,
}

/// Checks `π_q(B̄^r) = 0` for `q ≤ min(r - 1, through, top - 1)` and every
/// weight `1..=max_weight`, where `B̄^r` is spanned by words of length at
/// least `r` in the generators. `b` must be reduced (no generators in level
/// 0) and free with structure maps linear in the generators, so that word
/// length is preserved.
pub fn connectivity_check(
    b: &SimplicialPolynomialAlgebra,
    r: u32,
    through: usize,
    max_weight: u32,
) -> Result<ConnectivityReport> {
    if !b.generators(0).is_empty() {
        return Err(DkError::NotReduced(format!("level 0 has {} generators", b.generators(0).len())));
    }
    if b.has_relations() || !b.has_linear_structure_maps() {
        return Err(DkError::NotFree("structure maps must be linear on generators with no relations".into()));
    }
    let top = b.top();
    let last = (r as usize).checked_sub(1).map(|x| x.min(through)).filter(|_| top >= 1).map(|x| x.min(top - 1));
    let model = QuotientModel::new(b.clone(), max_weight)?;
    let mut rows = Vec::new();
    if let Some(last) = last {
        for w in 1..=max_weight {
            let space = model.simplicial_space(w)?;
            let spans: Vec<Vec<SparseVec>> = (0..=top)
                .map(|n| {
                    let s = model.slice(n, w);
                    s.monomials
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| m.length() >= r)
                        .map(|(i, _)| SparseVec::unit(i))
                        .collect()
                })
                .collect();
            let power = space.restrict(&spans)?;
            let c: ChainComplex = power.normalized_chains();
            for q in 0..=last {
                rows.push(HomotopyRow { degree: q, weight: w, dimension: c.homology(q)?.dimension });
            }
        }
    }
    let verdict = rows.iter().all(|row| row.dimension == 0);
    Ok(ConnectivityReport { power: r, checked_through: last, rows, verdict })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelIdealRow {
    pub weight: u32,
    pub slice_dim: usize,
    pub kernel_dim: usize,
    pub span_rank: usize,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelIdealReport {
    pub sphere: usize,
    pub level: usize,
    pub face: usize,
    /// Generator labels of the candidate ideal.
    pub generators: Vec<String>,
    pub rows: Vec<KernelIdealRow>,
    pub verdict: bool,
}

/// For the free algebra on `Γ` of the sphere complex `S^n`, checks per
/// weight that the ideal generated by
///
/// * `Γx·σ_J - Γx·σ_{J'}` where `J ∋ i`, `i - 1 ∉ J`, `J' = J - {i} + {i - 1}`,
/// * `Γx·σ_J` with neither `i` nor `i - 1` in `J`,
///
/// (`σ_J` the surjection repeating the indices in `J`) equals the kernel of
/// `d_i` on level `k`.
pub fn face_kernel_ideal_check(n: usize, k: usize, i: usize, max_weight: u32) -> Result<KernelIdealReport> {
    if k == 0 || i > k {
        return Err(DkError::OutOfRange { degree: i, max: k });
    }
    let (v, levels) = gamma_with_levels(&ChainComplex::sphere(n, k));
    let b = SimplicialPolynomialAlgebra::free(&v);
    let model = QuotientModel::new(b.clone(), max_weight)?;
    let var = |s: &Surjection| Poly::var(levels[k].position(s, 0).expect("sphere summand"));
    let mut gens = Vec::new();
    for (s, _) in &levels[k].entries {
        let j = s.repeats();
        let has_i = j.contains(&i);
        let has_prev = i >= 1 && j.contains(&(i - 1));
        if has_i && i >= 1 && !has_prev {
            let mut other: Vec<usize> = j.iter().copied().filter(|x| *x != i).collect();
            other.push(i - 1);
            other.sort_unstable();
            gens.push(var(s).sub(&var(&Surjection::new(k, other))));
        } else if !has_i && !has_prev {
            gens.push(var(s));
        }
    }
    let weights: Vec<u32> = b.generators(k).iter().map(|g| g.weight).collect();
    let mut rows = Vec::new();
    for w in 0..=max_weight {
        let slice = model.slice(k, w);
        let face = model.simplicial_space(w)?.face(k, i).clone();
        let mut span = Echelon::new(slice.monomials.len());
        let mut contained = true;
        for g in &gens {
            let gw = b.weights_of(k, g).first().copied().unwrap_or(0);
            if gw > w {
                continue;
            }
            for m in monomials_of_weight(&weights, w - gw) {
                let v = slice.vector(&Poly::monomial(m).mul(g, &[]))?;
                contained &= face.mul_vec(&v).is_zero();
                span.insert(&v);
            }
        }
        let kernel_dim = slice.monomials.len() - face.rank();
        rows.push(KernelIdealRow {
            weight: w,
            slice_dim: slice.monomials.len(),
            kernel_dim,
            span_rank: span.rank(),
            contained,
        });
    }
    let verdict = rows.iter().all(|r| r.contained && r.span_rank == r.kernel_dim);
    let generators = gens.iter().map(|g| b.format(k, g)).collect();
    Ok(KernelIdealReport { sphere: n, level: k, face: i, generators, rows, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::sphere_chains;

    #[test]
    fn powers_of_reduced_spheres() {
        for (n, r) in [(1, 2), (2, 3), (1, 1)] {
            let b = SimplicialPolynomialAlgebra::free(&sphere_chains(n, 4));
            let rep = connectivity_check(&b, r, 10, 3).unwrap();
            assert!(rep.verdict, "n={n} r={r}: {rep:?}");
            assert_eq!(rep.checked_through, Some((r as usize - 1).min(3)));
        }
    }

    #[test]
    fn unreduced_is_rejected() {
        let b = SimplicialPolynomialAlgebra::free(&crate::simplicial::SimplicialVectorSpace::constant(1, 2));
        assert!(matches!(connectivity_check(&b, 2, 1, 2), Err(DkError::NotReduced(_))));
    }

    #[test]
    fn kernel_ideal_small_cases() {
        for (n, k, i) in [(1, 1, 1), (1, 2, 0), (1, 2, 1), (1, 2, 2), (2, 3, 1), (1, 3, 2)] {
            let rep = face_kernel_ideal_check(n, k, i, 3).unwrap();
            assert!(rep.verdict, "{rep:?}");
            assert_eq!(rep.rows[0].kernel_dim, 0);
        }
    }
}
