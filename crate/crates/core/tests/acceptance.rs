//! Acceptance gate: one pass/fail line per criterion. Every comparison is
//! exact rational or integer equality.

mod common;

use std::time::Instant;

use common::{alg, choose, corpus, free_dim, random_complex, rng};
use dk_core::cartesian::{is_weak_equivalence, DerivedCartesianSpace, Point};
use dk_core::cdga::{koszul_algebra, koszul_complex, tor_dimensions, CdgaMorphism, FreeCdga, MorphismSpec};
use dk_core::linear::{ChainComplex, Matrix, SparseVec};
use dk_core::scdga::{connectivity_check, q_functor, QuotientModel, SimplicialPolynomialAlgebra};
use dk_core::simplicial::{gamma, gamma_with_levels, sphere_chains, Surjection};
use rand::Rng;
use serde_json::{json, Value};

struct Outcome {
    pass: bool,
    detail: String,
    report: Value,
}

fn outcome(pass: bool, detail: impl Into<String>, report: Value) -> Outcome {
    Outcome { pass, detail: detail.into(), report }
}

/// `N Γ C ≅ C` through the identity summand, and both formulas for `π`.
fn normalized_gamma_is_identity() -> Outcome {
    let mut r = rng(0x5eed_0001);
    let top = 4;
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for trial in 0..50 {
        let c = random_complex(&mut r, top, 3);
        let (v, levels) = gamma_with_levels(&c);
        let n = v.normalized();
        let mut ok = n.complex.dims() == c.dims();
        // P_k sends e_b to the normalized coordinates of its identity summand
        let p: Vec<Option<Matrix>> = (0..=top)
            .map(|k| {
                let cols: Option<Vec<SparseVec>> = (0..c.dim(k))
                    .map(|b| {
                        let pos = levels[k].position(&Surjection::identity(k), b)?;
                        n.coordinates(k, &SparseVec::unit(pos))
                    })
                    .collect();
                cols.map(|cols| Matrix::from_columns(n.complex.dim(k), cols))
            })
            .collect();
        if ok {
            for k in 0..=top {
                match &p[k] {
                    Some(m) if m.rank() == c.dim(k) => {}
                    _ => ok = false,
                }
            }
        }
        if ok {
            for k in 1..=top {
                let (pk, pk1) = (p[k].as_ref().unwrap(), p[k - 1].as_ref().unwrap());
                ok &= n.complex.boundary(k).mul(pk) == pk1.mul(&c.boundary(k));
            }
        }
        // homology of C by ranks, against both homotopy formulas
        let oracle: Vec<usize> = (0..top)
            .map(|k| c.dim(k) - c.boundary(k).rank() - c.boundary(k + 1).rank())
            .collect();
        let normalized: Vec<usize> = (0..top).map(|k| v.homotopy_normalized(k).unwrap().dimension).collect();
        let moore: Vec<usize> = (0..top).map(|k| v.homotopy_moore(k).unwrap()).collect();
        ok &= normalized == oracle && moore == oracle;
        if !ok {
            failures.push(trial);
        }
        rows.push(json!({"dims": c.dims(), "pi": oracle}));
    }
    outcome(
        failures.is_empty(),
        format!("50 random complexes, T=4, dims<=3; failures {failures:?}"),
        json!(rows),
    )
}

/// Shuffle-product axioms on normalized elements, exhaustively over bases.
fn ez_axioms() -> Outcome {
    let top = 3;
    let w_max = 3;
    let models: Vec<(&str, QuotientModel)> = vec![
        (
            "Sym Gamma S^1",
            QuotientModel::new(SimplicialPolynomialAlgebra::free(&gamma(&ChainComplex::sphere(1, top))), w_max)
                .unwrap(),
        ),
        (
            "Sym Gamma S^2",
            QuotientModel::new(SimplicialPolynomialAlgebra::free(&gamma(&ChainComplex::sphere(2, top))), w_max)
                .unwrap(),
        ),
        ("Q(K[x])", q_functor(&alg(&[("x", 0, 1)], &[]), top, w_max).unwrap().model().clone()),
    ];
    let mut pass = true;
    let mut report = Vec::new();
    let mut counts = Vec::new();
    for (name, model) in &models {
        let spaces: Vec<_> = (0..=w_max).map(|w| model.simplicial_space(w).unwrap()).collect();
        let norms: Vec<_> = spaces.iter().map(|s| s.normalized()).collect();
        let mut elems: Vec<(usize, u32, SparseVec)> = Vec::new();
        for w in 0..=w_max {
            for k in 0..=top {
                elems.extend(norms[w as usize].bases[k].iter().map(|b| (k, w, b.clone())));
            }
        }
        let fits = |p: usize, wp: u32| p <= top && wp <= w_max;
        let mul = |a: &(usize, u32, SparseVec), b: &(usize, u32, SparseVec)| {
            (a.0 + b.0, a.1 + b.1, model.ez_product(a.0, a.1, &a.2, b.0, b.1, &b.2).unwrap())
        };
        let d0 = |e: &(usize, u32, SparseVec)| -> Option<(usize, u32, SparseVec)> {
            (e.0 > 0).then(|| (e.0 - 1, e.1, spaces[e.1 as usize].face(e.0, 0).mul_vec(&e.2)))
        };
        let (mut closure, mut comm, mut assoc, mut unit, mut leibniz) = (true, true, true, true, true);
        let mut checked = [0usize; 5];
        let one = (0, 0, model.slice(0, 0).reduce(&dk_core::cdga::Poly::one()).unwrap());
        for x in &elems {
            let ux = mul(&one, x);
            let xu = mul(x, &one);
            unit &= ux.2 == x.2 && xu.2 == x.2;
            checked[0] += 1;
            for y in &elems {
                if !fits(x.0 + y.0, x.1 + y.1) {
                    continue;
                }
                let xy = mul(x, y);
                let yx = mul(y, x);
                closure &= norms[xy.1 as usize].coordinates(xy.0, &xy.2).is_some();
                let sign = if (x.0 * y.0) % 2 == 1 { yx.2.neg() } else { yx.2.clone() };
                comm &= xy.2 == sign;
                checked[1] += 1;
                // d0(xy) = d0x y + (-1)^p x d0y
                if let Some(dxy) = d0(&xy) {
                    let mut rhs = SparseVec::new();
                    if let Some(dx) = d0(x) {
                        rhs = rhs.add(&mul(&dx, y).2);
                    }
                    if let Some(dy) = d0(y) {
                        let t = mul(x, &dy).2;
                        rhs = if x.0 % 2 == 1 { rhs.sub(&t) } else { rhs.add(&t) };
                    }
                    leibniz &= dxy.2 == rhs;
                    checked[2] += 1;
                }
                for z in &elems {
                    if !fits(xy.0 + z.0, xy.1 + z.1) {
                        continue;
                    }
                    let l = mul(&xy, z);
                    let r = mul(x, &mul(y, z));
                    assoc &= l.2 == r.2;
                    checked[3] += 1;
                }
            }
        }
        checked[4] = elems.len();
        let ok = closure && comm && assoc && unit && leibniz;
        pass &= ok;
        counts.push(format!("{name}: {} elements, {} pairs, {} triples", checked[4], checked[1], checked[3]));
        report.push(json!({
            "model": name, "closure": closure, "commutativity": comm, "associativity": assoc,
            "unit": unit, "leibniz": leibniz, "elements": checked[4], "pairs": checked[1], "triples": checked[3],
        }));
    }
    outcome(pass, format!("T=3, W=3; {}", counts.join("; ")), json!(report))
}

/// `H(Sym V)` against `π(Sym Γ V)` per bidegree, with a closed-form oracle.
fn homology_commutes() -> Outcome {
    let top = 4;
    let w_max = 3;
    let s = |n| ChainComplex::sphere(n, top).into_complete();
    let d = |n| ChainComplex::disk(n, top).into_complete();
    let cases: Vec<(&str, ChainComplex, Vec<(usize, u32)>)> = vec![
        ("S^1", s(1), vec![(1, 1)]),
        ("S^2", s(2), vec![(2, 1)]),
        ("D^1", d(1), vec![]),
        ("D^2", d(2), vec![]),
        ("S^1+S^2", s(1).direct_sum(&s(2)), vec![(1, 1), (2, 1)]),
    ];
    let mut pass = true;
    let mut report = Vec::new();
    let mut bad = Vec::new();
    for (name, v, homology_gens) in &cases {
        let sym = FreeCdga::symmetric_on(v).unwrap();
        let model = QuotientModel::new(SimplicialPolynomialAlgebra::free(&gamma(v)), w_max).unwrap();
        let mut table = Vec::new();
        for w in 0..=w_max {
            let pi = model.normalized_algebra_complex(w).unwrap();
            for k in 0..=3 {
                let h = sym.homology_bigraded(k, w).unwrap().dimension;
                let p = pi.homology(k).unwrap().dimension;
                let o = free_dim(homology_gens, k, w);
                if h != p || p != o {
                    pass = false;
                    bad.push(format!("{name} ({k},{w}): H={h} pi={p} oracle={o}"));
                }
                table.push([k, w as usize, h, p]);
            }
        }
        report.push(json!({"space": name, "rows": table}));
    }
    outcome(pass, format!("5 complexes, degree<=3, weight<=3 {bad:?}"), json!(report))
}

/// Unit certificates `A → N Q(A)` through degree 3.
fn unit_certificates() -> Outcome {
    let mut pass = true;
    let mut report = Vec::new();
    let mut names = Vec::new();
    for (name, a) in corpus() {
        let q = q_functor(&a, 4, 3).unwrap();
        let c = q.beta().unwrap();
        let mut ok = c.verdict && c.checked_through == 3;
        // source homology from the algebra side
        for r in &c.reports {
            ok &= r.source_dim == a.homology_bigraded(r.degree, r.weight).unwrap().dimension;
            ok &= r.source_dim == r.target_dim && r.induced_rank == r.source_dim;
        }
        pass &= ok;
        names.push(format!("{name}={}", ok));
        report.push(serde_json::to_value(&c).unwrap());
    }
    outcome(pass, format!("T=4 (checked through 3), W=3: {}", names.join(", ")), json!(report))
}

/// Levelwise dimensions of `Q(Sym S^{k-1})` and `Sym K̄[S^{k-1}]`.
fn q_on_cells() -> Outcome {
    let top = 4;
    let w_max = 3;
    let mut pass = true;
    let mut report = Vec::new();
    let mut bad = Vec::new();
    for k in 1..=3usize {
        let a = FreeCdga::symmetric_on(&ChainComplex::sphere(k - 1, k - 1).into_complete()).unwrap();
        let q = q_functor(&a, top, w_max).unwrap();
        let free = QuotientModel::new(SimplicialPolynomialAlgebra::free(&sphere_chains(k - 1, top)), w_max).unwrap();
        let mut table = Vec::new();
        for w in 0..=w_max {
            let (dq, df) = (q.model().dims(w), free.dims(w));
            for n in 0..=top {
                // polynomials of weight w on C(n, k-1) generators of weight 1
                let gens = choose(n, k - 1);
                let oracle = if gens == 0 { usize::from(w == 0) } else { choose(gens + w as usize - 1, w as usize) };
                if dq[n] != df[n] || df[n] != oracle {
                    pass = false;
                    bad.push(format!("k={k} level {n} weight {w}: Q={} free={} oracle={oracle}", dq[n], df[n]));
                }
                table.push([n, w as usize, dq[n]]);
            }
        }
        report.push(json!({"k": k, "rows": table}));
    }
    outcome(pass, format!("k=1,2,3, level<=4, weight<=3 {bad:?}"), json!(report))
}

/// `π_q(B̄^r) = 0` for `q ≤ r - 1`, with a second computation by the
/// Moore formula on the same subspace.
fn connectivity() -> Outcome {
    let w_max = 4;
    let top = 4;
    let mut pass = true;
    let mut report = Vec::new();
    let mut lines = Vec::new();
    for n in [1usize, 2] {
        let b = SimplicialPolynomialAlgebra::free(&sphere_chains(n, top));
        let model = QuotientModel::new(b.clone(), w_max).unwrap();
        for r in [2u32, 3] {
            let rep = connectivity_check(&b, r, r as usize - 1, w_max).unwrap();
            let mut ok = rep.verdict && rep.checked_through == Some(r as usize - 1);
            for w in 1..=w_max {
                let space = model.simplicial_space(w).unwrap();
                let spans: Vec<Vec<SparseVec>> = (0..=top)
                    .map(|lvl| {
                        let s = model.slice(lvl, w);
                        (0..s.monomials.len())
                            .filter(|i| s.monomials[*i].length() >= r)
                            .map(SparseVec::unit)
                            .collect()
                    })
                    .collect();
                let power = space.restrict(&spans).unwrap();
                for q in 0..r as usize {
                    ok &= power.homotopy_moore(q).unwrap() == 0;
                }
            }
            pass &= ok;
            lines.push(format!("S^{n} r={r}: {ok}"));
            report.push(serde_json::to_value(&rep).unwrap());
        }
    }
    outcome(pass, format!("weight<=4: {}", lines.join(", ")), json!(report))
}

/// Koszul resolution exactness and Tor of the ground field.
fn koszul_tor() -> Outcome {
    let w_max = 4;
    let mut pass = true;
    let mut report = Vec::new();
    for m in 0..=3usize {
        let complexes = koszul_complex(m, w_max);
        let dg = koszul_algebra(m);
        let mut exact = true;
        for (w, c) in complexes.iter().enumerate() {
            for j in 0..=m {
                // basis: monomials of degree w - j times j-subsets
                let monomials = |d: usize| if m == 0 { usize::from(d == 0) } else { choose(m + d - 1, d) };
                let dim = if j > w { 0 } else { choose(m, j) * monomials(w - j) };
                exact &= c.dim(j) == dim;
                let expect = usize::from(w == 0 && j == 0);
                exact &= c.homology(j).unwrap().dimension == expect;
                exact &= dg.homology_bigraded(j, w as u32).unwrap().dimension == expect;
            }
        }
        let tor = tor_dimensions(m);
        let binom: Vec<usize> = (0..=m).map(|j| choose(m, j)).collect();
        let ok = exact && tor == binom;
        pass &= ok;
        report.push(json!({"m": m, "exact": exact, "tor": tor}));
    }
    outcome(pass, "m=0..3, weight<=4; Tor = binomial row", json!(report))
}

fn morphism(b: &FreeCdga, a: &FreeCdga, images: &[(&str, &str)]) -> CdgaMorphism {
    let spec = MorphismSpec { images: images.iter().map(|(x, y)| (x.to_string(), y.to_string())).collect() };
    CdgaMorphism::from_spec(b.clone(), a.clone(), &spec).unwrap()
}

fn identity_images(b: &FreeCdga) -> Vec<(String, String)> {
    b.generators().iter().map(|g| (g.name.clone(), g.name.clone())).collect()
}

fn pt(vals: &[(&str, i64)]) -> Point {
    vals.iter().map(|(n, v)| (n.to_string(), dk_core::linear::Scalar::from_int(*v))).collect()
}

fn locus(a: &FreeCdga) -> Vec<Point> {
    DerivedCartesianSpace::new(a.clone()).enumerate_classical_points().unwrap().expect("finite locus")
}

/// Random `X` with a finite classical locus: either linear equations of
/// full rank, or a single univariate equation.
fn random_space(r: &mut rand_chacha::ChaCha8Rng, linear: bool) -> FreeCdga {
    if linear {
        let nvars = r.gen_range(1..=2usize);
        loop {
            let neqs = r.gen_range(nvars..=nvars + 1);
            let mut gens: Vec<(String, usize, u32)> = (0..nvars).map(|i| (format!("x{i}"), 0, 1)).collect();
            let mut diff = Vec::new();
            for j in 0..neqs {
                gens.push((format!("xi{j}"), 1, 1));
                let terms: Vec<String> = (0..nvars).map(|i| format!("{}*x{i}", r.gen_range(-3..=3))).collect();
                diff.push((format!("xi{j}"), terms.join(" + ")));
            }
            let g: Vec<(&str, usize, u32)> = gens.iter().map(|(n, d, w)| (n.as_str(), *d, *w)).collect();
            let d: Vec<(&str, &str)> = diff.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let x = alg(&g, &d);
            if DerivedCartesianSpace::new(x.clone()).enumerate_classical_points().unwrap().is_some() {
                return x;
            }
        }
    } else {
        let e = r.gen_range(1..=3u32);
        let c = r.gen_range(1..=4);
        alg(&[("x", 0, 1), ("xi", 1, e)], &[("xi", &format!("{c}*x^{e}"))])
    }
}

fn with_acyclic_cell(x: &FreeCdga, attach: &str) -> FreeCdga {
    let mut spec = x.to_spec();
    spec.generators.push(dk_core::cdga::Generator::new("u", 0, 1));
    spec.generators.push(dk_core::cdga::Generator::new("eta", 1, 1));
    spec.differential.insert("eta".into(), attach.into());
    FreeCdga::from_spec(&spec).unwrap()
}

/// Algebra quasi-isomorphism against geometric weak equivalence.
fn weak_equivalences() -> Outcome {
    let w_max = 4;
    let mut r = rng(0x5eed_0008);
    // (name, map, expected verdict, hand-given loci of geometric source and target)
    let mut pairs: Vec<(String, CdgaMorphism, bool, Option<(Vec<Point>, Vec<Point>)>)> = Vec::new();
    for i in 0..10 {
        let x = random_space(&mut r, i % 2 == 0);
        let attach = if i % 2 == 0 { "u - x0" } else { "u" };
        let xa = with_acyclic_cell(&x, attach);
        let imgs = identity_images(&x);
        let imgs: Vec<(&str, &str)> = imgs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        pairs.push((format!("generated {i}"), morphism(&x, &xa, &imgs), true, None));
    }
    let k = FreeCdga::ground();
    let acyclic = alg(&[("x", 0, 1), ("xi", 1, 1)], &[("xi", "x")]);
    let fat = alg(&[("x", 0, 1), ("xi", 1, 2)], &[("xi", "x^2")]);
    let fat_cell = with_acyclic_cell(&fat, "u - x");
    pairs.push(("point into acyclic pair".into(), morphism(&k, &acyclic, &[]), true, None));
    pairs.push(("acyclic pair onto point".into(), morphism(&acyclic, &k, &[("x", "0"), ("xi", "0")]), true, None));
    pairs.push((
        "fat point with cell retracts".into(),
        morphism(&fat_cell, &fat, &[("x", "x"), ("xi", "xi"), ("u", "x"), ("eta", "0")]),
        true,
        Some((vec![pt(&[("x", 0)])], vec![pt(&[("x", 0), ("u", 0)])])),
    ));
    pairs.push(("fat point vs point".into(), morphism(&fat, &k, &[("x", "0"), ("xi", "0")]), false, None));
    let mut pass = true;
    let mut report = Vec::new();
    let mut bad = Vec::new();
    for (name, f, expected, given) in &pairs {
        let algebraic = f.is_quasi_iso(w_max).unwrap().verdict;
        let (src, tgt) = given.clone().unwrap_or_else(|| (locus(f.target()), locus(f.source())));
        for p in &src {
            assert!(DerivedCartesianSpace::new(f.target().clone()).is_classical_point(p).unwrap());
        }
        let geo = is_weak_equivalence(f, &src, &tgt).unwrap();
        let ok = algebraic == geo.verdict && geo.verdict == *expected;
        if !ok {
            bad.push(name.clone());
        }
        pass &= ok;
        report.push(json!({"pair": name, "algebraic": algebraic, "geometric": geo.verdict}));
    }
    outcome(pass, format!("10 generated + 3 hand-built + 1 non-example, weight<=4 {bad:?}"), json!(report))
}

/// `Ā/Ā²` against the indecomposables of `N Q(A)`, plus a generator count.
fn indecomposables() -> Outcome {
    let mut algebras = corpus();
    algebras.push(("K[x]", alg(&[("x", 0, 1)], &[])));
    algebras.push(("Koszul m=2", koszul_algebra(2)));
    algebras.push(("Sym (S^1+S^2)", {
        let s = |n| ChainComplex::sphere(n, 2).into_complete();
        FreeCdga::symmetric_on(&s(1).direct_sum(&s(2))).unwrap()
    }));
    let mut pass = true;
    let mut report = Vec::new();
    let mut bad = Vec::new();
    for (name, a) in &algebras {
        let q = q_functor(a, 4, 3).unwrap();
        let rows = q.indecomposables_table().unwrap();
        for row in &rows {
            let gens = a.generators().iter().filter(|g| g.degree == row.degree && g.weight == row.weight).count();
            if row.source_dim != row.target_dim || row.source_dim != gens {
                pass = false;
                bad.push(format!("{name} {row:?}"));
            }
        }
        report.push(json!({"algebra": name, "rows": serde_json::to_value(&rows).unwrap()}));
    }
    outcome(pass, format!("{} algebras, degree<=4, weight 1..=3 {bad:?}", algebras.len()), json!(report))
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 9] = [
    ("normalized chains of gamma are the identity; Moore pi = normalized pi", normalized_gamma_is_identity),
    ("shuffle-product algebra axioms on normalized slices", ez_axioms),
    ("homology of Sym V = homotopy of Sym Gamma V", homology_commutes),
    ("unit A -> N Q(A) is a quasi-isomorphism", unit_certificates),
    ("Q on sphere cells = free algebra on reduced sphere chains", q_on_cells),
    ("powers of the augmentation ideal are (r-1)-connected", connectivity),
    ("Koszul exactness and Tor dimensions", koszul_tor),
    ("algebra quasi-iso agrees with geometric weak equivalence", weak_equivalences),
    ("indecomposables of A and of N Q(A) agree", indecomposables),
];

fn run_all(print: bool) -> (bool, String) {
    let mut all = true;
    let mut reports = Vec::new();
    for (i, (name, f)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        if print {
            println!(
                "criterion {:>2} {}: {} [tolerance: exact] ({}; {:.1}s)",
                i + 1,
                if o.pass { "PASS" } else { "FAIL" },
                name,
                o.detail,
                start.elapsed().as_secs_f64()
            );
        }
        all &= o.pass;
        reports.push(json!({"criterion": i + 1, "pass": o.pass, "report": o.report}));
    }
    (all, serde_json::to_string(&reports).unwrap())
}

fn main() {
    let (first_ok, first) = run_all(true);
    let (_, second) = run_all(false);
    let same = first == second;
    println!(
        "criterion 10 {}: repeated run gives byte-identical reports [tolerance: exact] ({} bytes)",
        if same { "PASS" } else { "FAIL" },
        first.len()
    );
    if !(first_ok && same) {
        std::process::exit(1);
    }
}
