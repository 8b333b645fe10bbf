//! Reduced chains of pointed simplicial sets of the form `Δ^k / L`, where
//! `L` is the union of a set of codimension-one faces.

use super::simplex::MonotoneMap;
use super::space::SimplicialVectorSpace;
use crate::linear::{GradedVectorSpace, Matrix, SparseVec};

fn collapsed(map: &MonotoneMap, faces: &[usize]) -> bool {
    faces.iter().any(|i| !map.values().contains(i))
}

/// `K̄[Δ^k / L]` through level `top`, with `L` the union of the faces
/// opposite the vertices in `faces`. Basis of level `m`: monotone maps
/// `[m] -> [k]` not lying in `L`, in lexicographic order.
pub fn reduced_chains_quotient(k: usize, faces: &[usize], top: usize) -> SimplicialVectorSpace {
    let bases: Vec<Vec<MonotoneMap>> = (0..=top)
        .map(|m| MonotoneMap::all(m, k).into_iter().filter(|a| !collapsed(a, faces)).collect())
        .collect();
    let op = |n: usize, theta: &MonotoneMap| -> Matrix {
        let m = theta.source();
        let cols = bases[n]
            .iter()
            .map(|alpha| {
                let img = alpha.compose(theta);
                match bases[m].binary_search(&img) {
                    Ok(pos) => SparseVec::unit(pos),
                    Err(_) => {
                        debug_assert!(collapsed(&img, faces));
                        SparseVec::new()
                    }
                }
            })
            .collect();
        Matrix::from_columns(bases[m].len(), cols)
    };
    let faces_m = (0..=top)
        .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| op(n, &MonotoneMap::coface(n, i))).collect() })
        .collect();
    let degs = (0..=top)
        .map(|n| if n < top { (0..=n).map(|j| op(n, &MonotoneMap::codegeneracy(n, j))).collect() } else { vec![] })
        .collect();
    let labels = bases
        .iter()
        .map(|b| b.iter().map(|a| format!("{:?}", a.values())).collect())
        .collect();
    SimplicialVectorSpace::new(GradedVectorSpace::new(bases.iter().map(Vec::len).collect()), faces_m, degs)
        .expect("quotient of a simplex is simplicial")
        .with_labels(labels)
}

/// Reduced chains of the simplicial sphere `Δ^n / ∂Δ^n`.
pub fn sphere_chains(n: usize, top: usize) -> SimplicialVectorSpace {
    let faces: Vec<usize> = if n == 0 { vec![] } else { (0..=n).collect() };
    reduced_chains_quotient(n, &faces, top)
}

/// Reduced chains of the simplicial disk `Δ^k / Λ^k_0`.
pub fn disk_chains(k: usize, top: usize) -> SimplicialVectorSpace {
    let faces: Vec<usize> = (1..=k).collect();
    reduced_chains_quotient(k, &faces, top)
}
