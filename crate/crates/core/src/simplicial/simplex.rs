//! Monotone maps between finite ordinals `[m] = {0, .., m}`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// Order-preserving map `[source] -> [target]`, stored by its values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(target: usize, values: Vec<usize>) -> Self {
        assert!(!values.is_empty(), "monotone map needs a nonempty source");
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "map is not monotone");
        assert!(values.iter().all(|v| *v <= target), "value outside target");
        MonotoneMap { target, values }
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap { target: n, values: (0..=n).collect() }
    }

    /// Coface `δ^i : [n-1] -> [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        MonotoneMap { target: n, values: (0..n).map(|v| if v < i { v } else { v + 1 }).collect() }
    }

    /// Codegeneracy `σ^j : [n+1] -> [n]` hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        MonotoneMap { target: n, values: (0..=n + 1).map(|v| if v <= j { v } else { v - 1 }).collect() }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonotoneMap) -> MonotoneMap {
        assert_eq!(inner.target, self.source(), "composition mismatch");
        MonotoneMap { target: self.target, values: inner.values.iter().map(|v| self.values[*v]).collect() }
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target + 1
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Sorted image.
    pub fn image(&self) -> Vec<usize> {
        self.values.iter().copied().dedup().collect()
    }

    /// Epi-mono factorization `self = ε ∘ η` with `η` surjective; returns
    /// `η` and the image of `ε`.
    pub fn factor(&self) -> (Surjection, Vec<usize>) {
        let image = self.image();
        let eta: Vec<usize> =
            self.values.iter().map(|v| image.binary_search(v).expect("in image")).collect();
        (Surjection::from_values(&eta), image)
    }

    /// All monotone maps `[m] -> [n]`, in lexicographic order of values.
    pub fn all(m: usize, n: usize) -> Vec<MonotoneMap> {
        (0..=n)
            .combinations_with_replacement(m + 1)
            .map(|values| MonotoneMap { target: n, values })
            .collect()
    }
}

/// Monotone surjection `[source] ↠ [target]`, encoded by the strictly
/// increasing list of indices `i` with `f(i) = f(i + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surjection {
    source: usize,
    repeats: Vec<usize>,
}

impl Surjection {
    pub fn new(source: usize, repeats: Vec<usize>) -> Self {
        assert!(repeats.len() <= source, "too many repeats");
        assert!(repeats.windows(2).all(|w| w[0] < w[1]), "repeats must increase");
        assert!(repeats.iter().all(|r| *r < source), "repeat index out of range");
        Surjection { source, repeats }
    }

    pub fn identity(n: usize) -> Self {
        Surjection { source: n, repeats: Vec::new() }
    }

    pub fn from_values(values: &[usize]) -> Self {
        let source = values.len() - 1;
        let repeats = (0..source).filter(|i| values[*i] == values[i + 1]).collect();
        debug_assert!(values[0] == 0 && values.windows(2).all(|w| w[1] <= w[0] + 1));
        Surjection { source, repeats }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.source - self.repeats.len()
    }

    pub fn repeats(&self) -> &[usize] {
        &self.repeats
    }

    pub fn is_identity(&self) -> bool {
        self.repeats.is_empty()
    }

    pub fn to_map(&self) -> MonotoneMap {
        let mut values = Vec::with_capacity(self.source + 1);
        let mut cur = 0;
        for i in 0..=self.source {
            if i > 0 && !self.repeats.contains(&(i - 1)) {
                cur += 1;
            }
            values.push(cur);
        }
        MonotoneMap { target: self.target(), values }
    }

    /// All surjections `[n] ↠ [k]`, ordered lexicographically by repeats.
    pub fn all(n: usize, k: usize) -> Vec<Surjection> {
        if k > n {
            return Vec::new();
        }
        (0..n).combinations(n - k).map(|repeats| Surjection { source: n, repeats }).collect()
    }

    pub fn count(n: usize, k: usize) -> usize {
        if k > n {
            0
        } else {
            binomial(n, k)
        }
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]{:?}", self.source, self.target(), self.repeats)
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r: Vec<String> = self.repeats.iter().map(|r| r.to_string()).collect();
        write!(f, "{}<{}>", self.source, r.join(","))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Elementary steps realizing `θ^*` for `θ = ε ∘ η`: faces `d_i` (applied
/// first, largest missing index first) then degeneracies `s_j` (smallest
/// repeat first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Face(usize),
    Degeneracy(usize),
}

pub fn operator_steps(theta: &MonotoneMap) -> Vec<Step> {
    let (eta, image) = theta.factor();
    let mut steps: Vec<Step> = (0..=theta.target())
        .rev()
        .filter(|v| image.binary_search(v).is_err())
        .map(Step::Face)
        .collect();
    steps.extend(eta.repeats().iter().map(|j| Step::Degeneracy(*j)));
    steps
}
