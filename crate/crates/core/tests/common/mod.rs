#![allow(dead_code)]

use dk_core::cdga::{AlgebraSpec, FreeCdga, Generator};
use dk_core::linear::{ChainComplex, Matrix, Scalar, SparseVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn alg(gens: &[(&str, usize, u32)], diff: &[(&str, &str)]) -> FreeCdga {
    let spec = AlgebraSpec {
        generators: gens.iter().map(|(n, d, w)| Generator::new(*n, *d, *w)).collect(),
        differential: diff.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
    };
    FreeCdga::from_spec(&spec).unwrap()
}

/// The algebras used across the suite, by name.
pub fn corpus() -> Vec<(&'static str, FreeCdga)> {
    let sym = |c: ChainComplex| FreeCdga::symmetric_on(&c.into_complete()).unwrap();
    vec![
        ("Sym S^1", sym(ChainComplex::sphere(1, 1))),
        ("Sym S^2", sym(ChainComplex::sphere(2, 2))),
        ("Sym D^1", sym(ChainComplex::disk(1, 1))),
        ("Sym D^2", sym(ChainComplex::disk(2, 2))),
        ("fat point", alg(&[("x", 0, 1), ("xi", 1, 2)], &[("xi", "x^2")])),
        ("circle then cone", alg(&[("x", 1, 1), ("y", 2, 1)], &[("y", "x")])),
    ]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_scalar(r: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_int(r.gen_range(-2..=2))
}

/// A chain complex in degrees `0..=top` with every dimension at most
/// `max_dim`. Each boundary column is a random combination of a kernel
/// basis of the boundary below, so `d ∘ d = 0` by construction.
pub fn random_complex(r: &mut ChaCha8Rng, top: usize, max_dim: usize) -> ChainComplex {
    let dims: Vec<usize> = (0..=top).map(|_| r.gen_range(0..=max_dim)).collect();
    let mut diffs: Vec<Matrix> = Vec::new();
    for k in 1..=top {
        let below: Vec<SparseVec> = if k == 1 {
            (0..dims[0]).map(SparseVec::unit).collect()
        } else {
            diffs[k - 2].kernel_basis()
        };
        let cols = (0..dims[k])
            .map(|_| {
                let mut v = SparseVec::new();
                for b in &below {
                    v = v.axpy(&random_scalar(r), b);
                }
                v
            })
            .collect();
        diffs.push(Matrix::from_columns(dims[k - 1], cols));
    }
    ChainComplex::from_dims(dims, diffs).unwrap().into_complete()
}

/// `n choose k` by Pascal's rule.
pub fn choose(n: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// Dimension in bidegree `(n, w)` of the free graded-commutative algebra
/// on generators `(degree, weight)`: odd generators appear at most once.
pub fn free_dim(gens: &[(usize, u32)], n: usize, w: u32) -> usize {
    fn go(gens: &[(usize, u32)], n: usize, w: u32) -> usize {
        match gens.split_first() {
            None => usize::from(n == 0 && w == 0),
            Some((&(d, wt), rest)) => {
                let max_e = if d % 2 == 1 { 1 } else { u32::MAX };
                let mut total = 0;
                let mut e = 0u32;
                while e <= max_e && (e as usize) * d <= n && e * wt <= w {
                    total += go(rest, n - e as usize * d, w - e * wt);
                    if d == 0 && wt == 0 {
                        break;
                    }
                    e += 1;
                }
                total
            }
        }
    }
    go(gens, n, w)
}
