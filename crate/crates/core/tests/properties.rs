mod common;

use common::{alg, choose, corpus, random_complex, rng};
use dk_core::cartesian::DerivedCartesianSpace;
use dk_core::cdga::{CdgaMorphism, FreeCdga, Poly};
use dk_core::linear::{Echelon, Matrix, Scalar, SparseVec};
use dk_core::simplicial::{enumerate_shuffles, gamma};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(c.max(1)).take(r).collect();
            if c == 0 {
                Matrix::zero(r, 0)
            } else {
                Matrix::from_int_rows(&rows)
            }
        })
    })
}

/// A random homogeneous element of `a` in bidegree `(n, w)`.
fn element(a: &FreeCdga, n: usize, w: u32, coeffs: &[i64]) -> Poly {
    let mut p = Poly::zero();
    for (m, c) in a.basis(n, w).into_iter().zip(coeffs) {
        p.add_term(m, Scalar::from_int(*c));
    }
    p
}

fn sign(n: usize) -> Scalar {
    Scalar::from_int(if n % 2 == 1 { -1 } else { 1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let ech = Echelon::from_vectors(m.cols(), &m.row_vectors());
        prop_assert_eq!(ech.rank(), m.rank());
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).is_zero());
        }
        prop_assert_eq!(m.kernel_basis().len() + m.rank(), m.cols());
    }

    #[test]
    fn matrices_round_trip_through_json(m in small_matrix(), num in -50i64..50, den in 1i64..20) {
        let s = Scalar::new(num, den);
        let back: Scalar = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        prop_assert_eq!(back, s);
        let back: Matrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn gamma_is_simplicial_and_normalizes_back(seed in any::<u64>()) {
        let c = random_complex(&mut rng(seed), 3, 2);
        let v = gamma(&c);
        prop_assert!(v.check_identities().is_ok());
        let n = v.normalized_chains();
        prop_assert_eq!(n.dims(), c.dims());
        for k in 0..3 {
            prop_assert_eq!(v.homotopy_moore(k).unwrap(), c.homology(k).unwrap().dimension);
        }
    }

    #[test]
    fn shuffle_signs_are_coherent(p in 0usize..5, q in 0usize..5) {
        let shuffles = enumerate_shuffles(p, q);
        prop_assert_eq!(shuffles.len(), choose(p + q, p));
        let swapped = enumerate_shuffles(q, p);
        for s in &shuffles {
            // inversions of the permutation listing `first` then `second`
            let perm: Vec<usize> = s.first.iter().chain(&s.second).copied().collect();
            let inv = (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j]).count();
            prop_assert_eq!(s.sign, if inv % 2 == 1 { -1 } else { 1 });
            let t = swapped.iter().find(|t| t.first == s.second).unwrap();
            let expect = if (p * q) % 2 == 1 { -s.sign } else { s.sign };
            prop_assert_eq!(t.sign, expect);
        }
    }

    #[test]
    fn leibniz_and_graded_commutativity(
        which in 0usize..6,
        (n1, w1, n2, w2) in (0usize..3, 0u32..3, 0usize..3, 0u32..3),
        c1 in prop::collection::vec(-3i64..=3, 8),
        c2 in prop::collection::vec(-3i64..=3, 8),
    ) {
        let (_, a) = &corpus()[which];
        let x = element(a, n1, w1, &c1);
        let y = element(a, n2, w2, &c2);
        let xy = a.multiply(&x, &y);
        let yx = a.multiply(&y, &x);
        prop_assert_eq!(&xy, &yx.scale(&sign(n1 * n2)));
        let lhs = a.differential(&xy);
        let rhs = a.multiply(&a.differential(&x), &y).add(&a.multiply(&x, &a.differential(&y)).scale(&sign(n1)));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.differential(&a.differential(&x)).is_zero());
        prop_assert_eq!(a.parse(&a.format(&xy)).unwrap(), xy);
    }

    #[test]
    fn tangent_differential_squares_to_zero(a in -3i64..=3, b in -3i64..=3, c in 1i64..=3) {
        // one equation imposed twice, with a degree-2 relation between the copies
        let x = alg(
            &[("x", 0, 1), ("y", 0, 1), ("e", 1, 1), ("f", 1, 1), ("h", 1, 1), ("g", 2, 1)],
            &[
                ("e", &format!("{a}*x + {b}*y")),
                ("f", &format!("{}*x + {}*y", c * a, c * b)),
                ("h", "y"),
                ("g", &format!("{c}*e - f")),
            ],
        );
        let space = DerivedCartesianSpace::new(x.clone());
        if let Some(points) = space.enumerate_classical_points().unwrap() {
            for p in points {
                let t = space.tangent_complex(&p).unwrap();
                for j in 1..t.maps.len() {
                    prop_assert!(t.maps[j].mul(&t.maps[j - 1]).is_zero());
                }
            }
        }
    }

    #[test]
    fn attaching_an_acyclic_pair_is_invisible(seed in any::<u64>(), e in 1u32..4, c in 1i64..5) {
        let base = alg(&[("x", 0, 1), ("xi", 1, e)], &[("xi", &format!("{c}*x^{e}"))]);
        let mut spec = base.to_spec();
        let k = (seed % 2) as usize + 1;
        spec.generators.push(dk_core::cdga::Generator::new("u", k - 1, 1));
        spec.generators.push(dk_core::cdga::Generator::new("v", k, 1));
        spec.differential.insert("v".into(), "u".into());
        let bigger = FreeCdga::from_spec(&spec).unwrap();
        let f = CdgaMorphism::inclusion(&base, &bigger).unwrap();
        prop_assert!(f.is_quasi_iso(3).unwrap().verdict);
        for w in 0..=3 {
            for n in 0..=3 {
                prop_assert_eq!(
                    base.homology_bigraded(n, w).unwrap().dimension,
                    bigger.homology_bigraded(n, w).unwrap().dimension
                );
            }
        }
    }
}

#[test]
fn sparse_vectors_drop_zeros() {
    let v = SparseVec::from_ints(&[0, 2, 0, -1]);
    assert_eq!(v.nnz(), 2);
    assert!(v.sub(&v).is_zero());
}
