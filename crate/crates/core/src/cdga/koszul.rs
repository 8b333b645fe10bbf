//! Koszul resolution of the ground field over a polynomial ring, and Tor.
//!
//! For `A = K[x_1..x_m]` the complex `K_j = A ⊗ Λ^j⟨e_1..e_m⟩` has
//! `d(e_{i_0} ∧ .. ∧ e_{i_j}) = Σ_s (-1)^s x_{i_s} e_{i_0} ∧ .. ê_{i_s} .. ∧ e_{i_j}`.
//! Giving every `x_i` and `e_i` weight 1 splits it into finite complexes.

use itertools::Itertools;

use super::algebra::{FreeCdga, Generator};
use super::poly::{Monomial, Poly};
use crate::linear::{ChainComplex, GradedVectorSpace, Matrix, Scalar, SparseVec};

/// Exponent vectors of total degree `d` in `m` variables, lexicographically.
fn exponent_vectors(m: usize, d: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponent_vectors(m - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The Koszul differential on `e_I` as `(coefficient in A, e_J)` pairs.
fn koszul_boundary(subset: &[usize]) -> Vec<(Poly, Vec<usize>)> {
    subset
        .iter()
        .enumerate()
        .map(|(s, i)| {
            let sign = if s % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            let mut face = subset.to_vec();
            face.remove(s);
            (Poly::term(Monomial::var(*i), sign), face)
        })
        .collect()
}

/// The weight-`w` summand of the Koszul complex on `m` variables, degrees
/// `0..=m`. Basis of degree `j`: pairs (exponent vector of degree `w - j`,
/// `j`-subset), sorted.
pub fn koszul_complex_weight(m: usize, w: u32) -> ChainComplex {
    let bases: Vec<Vec<(Vec<u32>, Vec<usize>)>> = (0..=m)
        .map(|j| {
            if (j as u32) > w {
                return Vec::new();
            }
            let mut b: Vec<(Vec<u32>, Vec<usize>)> = exponent_vectors(m, w - j as u32)
                .into_iter()
                .cartesian_product((0..m).combinations(j))
                .collect();
            b.sort();
            b
        })
        .collect();
    let diffs = (1..=m)
        .map(|j| {
            let cols = bases[j]
                .iter()
                .map(|(a, subset)| {
                    koszul_boundary(subset)
                        .into_iter()
                        .flat_map(|(coef, face)| {
                            let (mono, c) = coef.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
                            let mut exps = a.clone();
                            for (i, e) in mono.factors() {
                                exps[*i] += e;
                            }
                            let row = bases[j - 1].binary_search(&(exps, face)).expect("Koszul basis");
                            Some((row, c))
                        })
                        .collect::<SparseVec>()
                })
                .collect();
            Matrix::from_columns(bases[j - 1].len(), cols)
        })
        .collect();
    let labels = bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|(a, s)| {
                    let xs: Vec<String> = a
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| **e > 0)
                        .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                        .collect();
                    let es: Vec<String> = s.iter().map(|i| format!("e{}", i + 1)).collect();
                    let x = if xs.is_empty() { "1".to_string() } else { xs.join("*") };
                    if es.is_empty() {
                        x
                    } else {
                        format!("{x}*{}", es.join("^"))
                    }
                })
                .collect()
        })
        .collect();
    let mut space = GradedVectorSpace::new(bases.iter().map(Vec::len).collect());
    space.labels = Some(labels);
    ChainComplex::new(space, diffs).expect("Koszul complex").into_complete()
}

/// Weight summands `0..=max_weight` of the Koszul complex on `m` variables.
pub fn koszul_complex(m: usize, max_weight: u32) -> Vec<ChainComplex> {
    (0..=max_weight).map(|w| koszul_complex_weight(m, w)).collect()
}

/// `K_•(A, K) ⊗_A K`: basis `Λ^j(K^m)` with each coefficient of the Koszul
/// differential evaluated at the augmentation `x ↦ 0`.
pub fn koszul_tensored(m: usize) -> ChainComplex {
    let bases: Vec<Vec<Vec<usize>>> = (0..=m).map(|j| (0..m).combinations(j).collect()).collect();
    let zeros = vec![Some(Scalar::zero()); m];
    let diffs = (1..=m)
        .map(|j| {
            let cols = bases[j]
                .iter()
                .map(|subset| {
                    koszul_boundary(subset)
                        .into_iter()
                        .map(|(coef, face)| {
                            let row = bases[j - 1].binary_search(&face).expect("subset basis");
                            (row, coef.evaluate(&zeros).expect("coefficient in x"))
                        })
                        .collect::<SparseVec>()
                })
                .collect();
            Matrix::from_columns(bases[j - 1].len(), cols)
        })
        .collect();
    ChainComplex::from_dims(bases.iter().map(Vec::len).collect(), diffs)
        .expect("tensored Koszul complex")
        .into_complete()
}

/// Homology dimensions of `K_•(A, K) ⊗_A K`, i.e. `dim Tor_j^A(K, K)`.
pub fn tor_dimensions(m: usize) -> Vec<usize> {
    koszul_tensored(m).homology_dims()
}

/// The same resolution as a DG algebra: `x_i` in degree 0, `e_i` in degree
/// 1, `d e_i = x_i`, all of weight 1.
pub fn koszul_algebra(m: usize) -> FreeCdga {
    let mut gens = Vec::new();
    let mut diff = Vec::new();
    for i in 0..m {
        gens.push(Generator::new(format!("x{}", i + 1), 0, 1));
        diff.push(Poly::zero());
    }
    for i in 0..m {
        gens.push(Generator::new(format!("e{}", i + 1), 1, 1));
        diff.push(Poly::var(i));
    }
    FreeCdga::new(gens, diff).expect("Koszul algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::simplex::binomial;

    #[test]
    fn one_variable() {
        for w in 1..5 {
            let c = koszul_complex_weight(1, w);
            assert_eq!(c.dims(), &[1, 1]);
            assert_eq!(c.differentials()[0].rank(), 1);
            assert_eq!(c.homology_dims(), vec![0, 0]);
        }
    }

    #[test]
    fn weight_zero_is_the_ground_field() {
        for m in 0..4 {
            let dims = koszul_complex_weight(m, 0).homology_dims();
            assert_eq!(dims[0], 1);
            assert!(dims[1..].iter().all(|d| *d == 0));
        }
    }

    #[test]
    fn exact_in_positive_weight() {
        for m in 1..4 {
            for w in 1..5 {
                assert!(koszul_complex_weight(m, w).homology_dims().iter().all(|d| *d == 0), "m={m} w={w}");
            }
        }
    }

    #[test]
    fn tor_is_exterior() {
        for m in 0..5 {
            let expect: Vec<usize> = (0..=m).map(|j| binomial(m, j)).collect();
            assert_eq!(tor_dimensions(m), expect);
        }
    }

    #[test]
    fn agrees_with_dg_algebra() {
        // same complex through the Leibniz rule, with bases matched by name
        for m in 1..4 {
            let a = koszul_algebra(m);
            for w in 0..4u32 {
                let explicit = koszul_complex_weight(m, w);
                let slice = a.weight_slice(w).unwrap();
                let labels = explicit.spaces().labels.clone().unwrap();
                for j in 1..=m.min(slice.complex.top()) {
                    let perm = |k: usize| -> Vec<usize> {
                        slice.bases[k]
                            .iter()
                            .map(|mono| {
                                let xs: Vec<String> = mono
                                    .factors()
                                    .iter()
                                    .filter(|(i, _)| *i < m)
                                    .map(|(i, e)| if *e == 1 { a.name(*i) } else { format!("{}^{e}", a.name(*i)) })
                                    .collect();
                                let es: Vec<String> =
                                    mono.factors().iter().filter(|(i, _)| *i >= m).map(|(i, _)| a.name(*i)).collect();
                                let x = if xs.is_empty() { "1".to_string() } else { xs.join("*") };
                                let label = if es.is_empty() { x } else { format!("{x}*{}", es.join("^")) };
                                labels[k].iter().position(|l| *l == label).expect("label")
                            })
                            .collect()
                    };
                    let (src, tgt) = (perm(j), perm(j - 1));
                    let d_alg = slice.complex.boundary(j);
                    let d_exp = explicit.boundary(j);
                    for (c, col) in src.iter().enumerate() {
                        for (r, row) in tgt.iter().enumerate() {
                            assert_eq!(d_alg.get(r, c), d_exp.get(*row, *col), "m={m} w={w} j={j}");
                        }
                    }
                }
            }
        }
    }
}
