//! Semifree algebras with polynomial degree-0 part, read as derived
//! Cartesian spaces: classical points, tangent complexes, forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::cdga::{FreeCdga, Generator, Monomial, Poly};
use crate::error::{DkError, Result};
use crate::linear::{ChainComplex, Echelon, Matrix, Scalar, SparseVec};

/// Values of the degree-0 generators, by name.
pub type Point = BTreeMap<String, Scalar>;

/// A semifree algebra viewed as the functions on a derived Cartesian space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedCartesianSpace {
    algebra: FreeCdga,
}

/// Cochain complex `T^0 → T^1 → ..`, `T^j` spanned by the degree-`j`
/// generators, with maps the differential linearized at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentComplex {
    pub point: Point,
    /// Generator names spanning each cochain degree `0..=amplitude`.
    pub generators: Vec<Vec<String>>,
    /// `maps[j] : T^j → T^{j+1}`; rows are degree-`(j+1)` generators.
    pub maps: Vec<Matrix>,
    pub cohomology: Vec<usize>,
}

impl TangentComplex {
    pub fn amplitude(&self) -> usize {
        self.generators.len() - 1
    }

    /// The same data as a chain complex, cochain degree `j` placed in chain
    /// degree `amplitude - j`.
    pub fn as_chain_complex(&self) -> ChainComplex {
        let a = self.amplitude();
        let dims: Vec<usize> = (0..=a).map(|k| self.generators[a - k].len()).collect();
        let diffs = (1..=a).map(|k| self.maps[a - k].clone()).collect();
        ChainComplex::from_dims(dims, diffs).expect("linearized differential squares to zero").into_complete()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormGenerator {
    pub name: String,
    pub degree: usize,
    pub weight: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDimension {
    pub degree: usize,
    pub weight: u32,
    pub dimension: usize,
}

/// `Ā/Ā²` at an origin and the dimensions of the free graded-commutative
/// algebra on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormsReport {
    pub origin: Point,
    pub generators: Vec<FormGenerator>,
    pub dimensions: Vec<FormDimension>,
}

impl DerivedCartesianSpace {
    pub fn new(algebra: FreeCdga) -> Self {
        DerivedCartesianSpace { algebra }
    }

    pub fn algebra(&self) -> &FreeCdga {
        &self.algebra
    }

    /// Largest generator degree.
    pub fn amplitude(&self) -> usize {
        self.algebra.max_generator_degree()
    }

    /// Indices of generators of degree `j`, in canonical order.
    pub fn generators_of_degree(&self, j: usize) -> Vec<usize> {
        (0..self.algebra.len()).filter(|i| self.algebra.generator(*i).degree == j).collect()
    }

    /// Per-generator values: the point on degree-0 generators, nothing
    /// elsewhere.
    pub fn values(&self, p: &Point) -> Result<Vec<Option<Scalar>>> {
        for name in p.keys() {
            match self.algebra.index_of(name) {
                Some(i) if self.algebra.generator(i).degree == 0 => {}
                _ => return Err(DkError::UnknownGenerator(name.clone())),
            }
        }
        (0..self.algebra.len())
            .map(|i| {
                let g = self.algebra.generator(i);
                if g.degree != 0 {
                    return Ok(None);
                }
                p.get(&g.name).cloned().map(Some).ok_or_else(|| DkError::MissingAssignment(g.name.clone()))
            })
            .collect()
    }

    /// The first degree-1 generator whose differential does not vanish at
    /// `p`, with the value.
    fn failing_generator(&self, p: &Point) -> Result<Option<(String, Scalar)>> {
        let vals = self.values(p)?;
        for i in self.generators_of_degree(1) {
            let v = self.algebra.generator_differential(i).evaluate(&vals).expect("degree-0 polynomial");
            if !v.is_zero() {
                return Ok(Some((self.algebra.name(i), v)));
            }
        }
        Ok(None)
    }

    /// Whether every degree-1 differential vanishes at `p`.
    pub fn is_classical_point(&self, p: &Point) -> Result<bool> {
        Ok(self.failing_generator(p)?.is_none())
    }

    pub fn require_classical(&self, p: &Point) -> Result<()> {
        match self.failing_generator(p)? {
            None => Ok(()),
            Some((generator, value)) => Err(DkError::NotClassical { generator, value: value.to_string() }),
        }
    }

    /// Substitution `x ↦ x + p(x)` on degree-0 generators.
    pub fn shift(&self, p: &Point) -> Result<Vec<Poly>> {
        let vals = self.values(p)?;
        Ok((0..self.algebra.len())
            .map(|i| match &vals[i] {
                Some(c) => Poly::var(i).add(&Poly::constant(c.clone())),
                None => Poly::var(i),
            })
            .collect())
    }

    /// Coefficients of the degree-`j` generators in the linear part of a
    /// polynomial already shifted to the point.
    pub(crate) fn linear_row(&self, p: &Poly, cols: &[usize]) -> SparseVec {
        let lin = p.length_part(1);
        cols.iter()
            .enumerate()
            .filter_map(|(c, g)| {
                let x = lin.coefficient(&Monomial::var(*g));
                (!x.is_zero()).then_some((c, x))
            })
            .collect()
    }

    /// Tangent complex at a classical point, cochain degrees
    /// `0..=amplitude` (at least `0..=min_amplitude`).
    pub fn tangent_complex_to(&self, p: &Point, min_amplitude: usize) -> Result<TangentComplex> {
        self.require_classical(p)?;
        let shift = self.shift(p)?;
        let amp = self.amplitude().max(min_amplitude);
        let by_degree: Vec<Vec<usize>> = (0..=amp + 1).map(|j| self.generators_of_degree(j)).collect();
        let parity = self.algebra.parity();
        let maps: Vec<Matrix> = (0..amp)
            .map(|j| {
                let rows: Vec<SparseVec> = by_degree[j + 1]
                    .iter()
                    .map(|g| {
                        let d = self.algebra.generator_differential(*g).substitute(&shift, parity);
                        self.linear_row(&d, &by_degree[j])
                    })
                    .collect();
                Matrix::from_rows(by_degree[j].len(), &rows)
            })
            .collect();
        let generators: Vec<Vec<String>> =
            by_degree[..=amp].iter().map(|gs| gs.iter().map(|g| self.algebra.name(*g)).collect()).collect();
        let ranks: Vec<usize> = maps.iter().map(Matrix::rank).collect();
        let cohomology = (0..=amp)
            .map(|j| {
                let out = if j < amp { ranks[j] } else { 0 };
                let inc = if j > 0 { ranks[j - 1] } else { 0 };
                generators[j].len() - out - inc
            })
            .collect();
        let t = TangentComplex { point: p.clone(), generators, maps, cohomology };
        for j in 1..t.maps.len() {
            if !t.maps[j].mul(&t.maps[j - 1]).is_zero() {
                return Err(DkError::Precondition("linearized differential does not square to zero".into()));
            }
        }
        Ok(t)
    }

    pub fn tangent_complex(&self, p: &Point) -> Result<TangentComplex> {
        self.tangent_complex_to(p, 0)
    }

    /// Generators of `Ā/Ā²` for the augmentation at `origin`, and the
    /// dimensions of the free graded-commutative algebra on them through
    /// degree `max_degree` and weight `max_weight`.
    pub fn differential_forms_generators(
        &self,
        origin: Option<&Point>,
        max_degree: usize,
        max_weight: u32,
    ) -> Result<FormsReport> {
        let origin = origin.ok_or(DkError::NoOrigin)?;
        self.require_classical(origin)?;
        let generators: Vec<FormGenerator> = self
            .algebra
            .generators()
            .iter()
            .map(|g| {
                let c = origin.get(&g.name).filter(|c| !c.is_zero());
                let name = match c {
                    Some(c) if c.is_negative() => format!("{} + {}", g.name, c.abs()),
                    Some(c) => format!("{} - {c}", g.name),
                    None => g.name.clone(),
                };
                FormGenerator { name, degree: g.degree, weight: g.weight }
            })
            .collect();
        let free = FreeCdga::new(
            self.algebra.generators().iter().map(|g| Generator::new(g.name.clone(), g.degree, g.weight)).collect(),
            vec![Poly::zero(); self.algebra.len()],
        )?;
        let mut dimensions = Vec::new();
        for w in 0..=max_weight {
            for n in 0..=max_degree {
                dimensions.push(FormDimension { degree: n, weight: w, dimension: free.basis(n, w).len() });
            }
        }
        Ok(FormsReport { origin: origin.clone(), generators, dimensions })
    }

    /// All rational classical points when they are finitely many and every
    /// degree-1 differential is linear, or every one involves at most one
    /// variable. `None` when the locus is infinite or the system is of
    /// another shape.
    pub fn enumerate_classical_points(&self) -> Result<Option<Vec<Point>>> {
        let vars = self.generators_of_degree(0);
        let eqs: Vec<&Poly> = self
            .generators_of_degree(1)
            .into_iter()
            .map(|g| self.algebra.generator_differential(g))
            .filter(|p| !p.is_zero())
            .collect();
        let name = |i: usize| self.algebra.name(vars[i]);
        if eqs.iter().all(|p| p.terms().all(|(m, _)| m.length() <= 1)) {
            let mut e = Echelon::new(vars.len() + 1);
            for p in &eqs {
                let mut row: Vec<(usize, Scalar)> = vars
                    .iter()
                    .enumerate()
                    .filter_map(|(c, g)| {
                        let x = p.coefficient(&Monomial::var(*g));
                        (!x.is_zero()).then_some((c, x))
                    })
                    .collect();
                let c0 = p.constant_term();
                if !c0.is_zero() {
                    row.push((vars.len(), c0));
                }
                e.insert(&SparseVec::from_pairs(row));
            }
            if e.is_pivot(vars.len()) {
                return Ok(Some(Vec::new()));
            }
            if e.rank() < vars.len() {
                return Ok(None);
            }
            let point = e.rows().map(|(c, row)| (name(c), -row.get(vars.len()))).collect();
            return Ok(Some(vec![point]));
        }
        let mut per_var: Vec<Vec<&Poly>> = vec![Vec::new(); vars.len()];
        for p in &eqs {
            let used = p.variables();
            match used.as_slice() {
                [] => return Ok(Some(Vec::new())),
                [v] => per_var[vars.iter().position(|g| g == v).expect("degree-0 variable")].push(p),
                _ => return Ok(None),
            }
        }
        let mut choices: Vec<Vec<Scalar>> = Vec::with_capacity(vars.len());
        for (i, ps) in per_var.iter().enumerate() {
            let Some(first) = ps.first() else { return Ok(None) };
            let Some(roots) = rational_roots(&univariate_coefficients(first, vars[i])) else { return Ok(None) };
            let vals = |r: &Scalar| {
                let mut v = vec![None; self.algebra.len()];
                v[vars[i]] = Some(r.clone());
                v
            };
            choices.push(
                roots
                    .into_iter()
                    .filter(|r| ps.iter().all(|p| p.evaluate(&vals(r)).is_some_and(|x| x.is_zero())))
                    .collect(),
            );
        }
        let mut points: Vec<Point> = vec![Point::new()];
        for (i, rs) in choices.iter().enumerate() {
            points = points
                .into_iter()
                .flat_map(|p| {
                    rs.iter().map(move |r| {
                        let mut q = p.clone();
                        q.insert(name(i), r.clone());
                        q
                    })
                })
                .collect();
        }
        Ok(Some(points))
    }
}

/// Coefficients by exponent of a polynomial in the single variable `v`.
fn univariate_coefficients(p: &Poly, v: usize) -> Vec<Scalar> {
    let deg = p.terms().map(|(m, _)| m.exponent(v)).max().unwrap_or(0) as usize;
    let mut out = vec![Scalar::zero(); deg + 1];
    for (m, c) in p.terms() {
        out[m.exponent(v) as usize] = c.clone();
    }
    out
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.checked_mul(d)? <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 10_000_000 {
            return None;
        }
    }
    Some(out)
}

/// Distinct rational roots, sorted, by the rational root test. `None` if
/// the polynomial is zero or the coefficients are too large to factor.
fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let low = coeffs.iter().position(|c| !c.is_zero())?;
    let high = coeffs.iter().rposition(|c| !c.is_zero())?;
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = coeffs[low..=high].iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Scalar::zero());
    }
    let (a0, an) = (ints.first()?, ints.last()?);
    let eval = |x: &Scalar| {
        ints.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + Scalar::from(num_rational::BigRational::from_integer(c.clone())))
    };
    for p in divisors(a0)? {
        for q in divisors(an)? {
            for sign in [1i64, -1] {
                let x = Scalar::from_bigs(&p * sign, q.clone()).ok()?;
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}
