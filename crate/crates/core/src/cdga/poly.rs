//! Sparse polynomials in graded-commutative variables.
//!
//! Variables are identified by index. Index order is the canonical factor
//! order, so a monomial is a sorted list of `(variable, exponent)` pairs.
//! Parity is supplied by the caller as a slice of odd flags; indices past
//! the end of the slice count as even, so an empty slice gives ordinary
//! commutative polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::linear::Scalar;

#[inline]
fn is_odd(odd: &[bool], i: usize) -> bool {
    odd.get(i).copied().unwrap_or(false)
}

/// Product of variables in canonical order, without a coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i, 1)])
    }

    pub fn power(i: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(i, e)])
        }
    }

    /// Builds from `(variable, exponent)` pairs that are already sorted,
    /// distinct, and have positive exponents.
    pub fn from_sorted(factors: Vec<(usize, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|f| f.1 > 0));
        Monomial(factors)
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Word length: total number of variable factors.
    pub fn length(&self) -> u32 {
        self.0.iter().map(|f| f.1).sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.iter().find(|f| f.0 == i).map_or(0, |f| f.1)
    }

    /// Variables with multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<usize> {
        self.0.iter().flat_map(|(i, e)| std::iter::repeat(*i).take(*e as usize)).collect()
    }

    /// `Σ exponent · f(variable)` for an additive grading `f`.
    pub fn grading(&self, f: impl Fn(usize) -> usize) -> usize {
        self.0.iter().map(|(i, e)| *e as usize * f(*i)).sum()
    }

    /// Product `self · other` brought to canonical order. Returns `None`
    /// when an odd variable would appear twice; otherwise the monomial and
    /// whether the Koszul sign is negative.
    pub fn mul(&self, other: &Monomial, odd: &[bool]) -> Option<(Monomial, bool)> {
        let mut swaps = 0usize;
        // each odd factor of self passes every smaller odd factor of other
        let mut odd_right_below = 0usize;
        let right_odd: Vec<usize> = other.0.iter().filter(|f| is_odd(odd, f.0)).map(|f| f.0).collect();
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() || b < other.0.len() {
            let take_left = b >= other.0.len() || (a < self.0.len() && self.0[a].0 < other.0[b].0);
            let take_both = a < self.0.len() && b < other.0.len() && self.0[a].0 == other.0[b].0;
            if take_both {
                let (i, e) = self.0[a];
                if is_odd(odd, i) {
                    return None;
                }
                out.push((i, e + other.0[b].1));
                a += 1;
                b += 1;
            } else if take_left {
                out.push(self.0[a]);
                a += 1;
            } else {
                out.push(other.0[b]);
                b += 1;
            }
        }
        for (i, _) in &self.0 {
            if is_odd(odd, *i) {
                while odd_right_below < right_odd.len() && right_odd[odd_right_below] < *i {
                    odd_right_below += 1;
                }
                swaps += odd_right_below;
            }
        }
        Some((Monomial(out), swaps % 2 == 1))
    }

    /// Removes one factor of variable `i`, returning the rest and the sign
    /// of moving that factor to the front.
    pub fn split_factor(&self, i: usize, odd: &[bool]) -> Option<(Monomial, bool)> {
        let pos = self.0.iter().position(|f| f.0 == i)?;
        let mut rest = self.0.clone();
        if rest[pos].1 == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 -= 1;
        }
        let negative = is_odd(odd, i)
            && self.0[..pos].iter().filter(|f| is_odd(odd, f.0)).count() % 2 == 1;
        Some((Monomial(rest), negative))
    }

    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Vec<(usize, u32)> {
        self.0.iter().map(|(i, e)| (f(*i), *e)).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(i, e)| if *e == 1 { format!("v{i}") } else { format!("v{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Finite linear combination of monomials with nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Poly::term(Monomial::var(i), Scalar::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, other: &Poly, odd: &[bool]) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul(m2, odd) {
                    let c = c1 * c2;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        out
    }

    /// Product in the given left-to-right order.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Poly>, odd: &[bool]) -> Poly {
        factors.into_iter().fold(Poly::one(), |acc, f| acc.mul(f, odd))
    }

    /// Ring map sending variable `i` to `images[i]`; factors are multiplied
    /// in canonical order. `odd` is the parity of the target variables.
    pub fn substitute(&self, images: &[Poly], odd: &[bool]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for i in m.expanded() {
                acc = acc.mul(&images[i], odd);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        out
    }

    /// Same substitution with images computed on demand and memoized per
    /// variable.
    pub fn substitute_with(&self, image: impl Fn(usize) -> Poly, odd: &[bool]) -> Poly {
        let mut cache: BTreeMap<usize, Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for i in m.expanded() {
                let img = cache.entry(i).or_insert_with(|| image(i));
                acc = acc.mul(img, odd);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        out
    }

    /// Evaluates at a point; `values[i]` is `None` for variables that must
    /// not occur (the result is then `None` if they do).
    pub fn evaluate(&self, values: &[Option<Scalar>]) -> Option<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.factors() {
                t *= &values.get(*i).cloned().flatten()?.pow(*e);
            }
            total += &t;
        }
        Some(total)
    }

    /// Homogeneous part of word length `r`.
    pub fn length_part(&self, r: u32) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| m.length() == r).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Distinct values of an additive grading over the terms.
    pub fn gradings(&self, f: impl Fn(usize) -> usize + Copy) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|m| m.grading(f)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().flat_map(|m| m.factors().iter().map(|f| f.0)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Relabels variables through an order-changing map, re-deriving Koszul
    /// signs in the new order. `odd` is indexed by the new labels.
    pub fn relabel(&self, map: &[usize], odd: &[bool]) -> Poly {
        let images: Vec<Poly> = map.iter().map(|j| Poly::var(*j)).collect();
        self.substitute(&images, odd)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromIterator<(Monomial, Scalar)> for Poly {
    fn from_iter<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}
