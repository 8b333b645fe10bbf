use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A `(p, q)`-shuffle: `first` (size `p`) and `second` (size `q`) partition
/// `{0, .., p+q-1}`; `sign` is the parity of the permutation listing `first`
/// then `second`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shuffle {
    pub p: usize,
    pub q: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub sign: i8,
}

/// All `(p, q)`-shuffles, ordered lexicographically by `first`.
pub fn enumerate_shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    (0..p + q)
        .combinations(p)
        .map(|first| {
            let second: Vec<usize> = (0..p + q).filter(|i| !first.contains(i)).collect();
            let inversions: usize =
                first.iter().map(|a| second.iter().filter(|b| *b < a).count()).sum();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            Shuffle { p, q, first, second, sign }
        })
        .collect()
}
