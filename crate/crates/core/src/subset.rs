//! Colexicographic ranking of fixed-size subsets of `{0..n-1}`.
//!
//! A sorted subset `s_0 < s_1 < ... < s_{r-1}` has colex rank
//! `sum C(s_i, i + 1)`. The rank of a subset does not depend on `n`, which
//! is what lets every colouring store its colours in a flat array indexed by
//! rank and lets blow-ups compute ranks of sub-edges with a table lookup.

use crate::error::{Error, Result};

/// `C(n, k)` with saturation on overflow. Zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Precomputed binomials `C(v, j)` for `v < n` and `j <= max_k`, laid out so
/// that ranking an `r`-set costs `r` lookups.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    n: usize,
    max_k: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    pub fn new(n: usize, max_k: usize) -> Self {
        let stride = max_k + 1;
        let mut table = vec![0u64; (n + 1) * stride];
        for v in 0..=n {
            for j in 0..=max_k {
                table[v * stride + j] = binomial(v, j);
            }
        }
        BinomialTable { n, max_k, table }
    }

    #[inline]
    pub fn get(&self, v: usize, j: usize) -> u64 {
        debug_assert!(v <= self.n && j <= self.max_k);
        self.table[v * (self.max_k + 1) + j]
    }

    /// Colex rank of a sorted subset; no validation.
    #[inline]
    pub fn rank_sorted(&self, s: &[usize]) -> u64 {
        s.iter()
            .enumerate()
            .map(|(i, &v)| self.get(v, i + 1))
            .sum()
    }

    /// Colex rank of the sorted subset `s` with position `skip` removed.
    #[inline]
    pub fn rank_without(&self, s: &[usize], skip: usize) -> u64 {
        let mut acc = 0;
        for (i, &v) in s.iter().enumerate() {
            if i < skip {
                acc += self.get(v, i + 1);
            } else if i > skip {
                acc += self.get(v, i);
            }
        }
        acc
    }
}

/// Validates that `s` is a strictly increasing `r`-subset of `{0..n-1}`.
pub fn check_subset(s: &[usize], n: usize, r: usize) -> Result<()> {
    if s.len() != r {
        return Err(Error::WrongCardinality {
            expected: r,
            found: s.len(),
        });
    }
    for (i, &v) in s.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if i > 0 && s[i - 1] >= v {
            return Err(Error::UnsortedSubset(s.to_vec()));
        }
    }
    Ok(())
}

/// Colex rank of an `r`-subset of `{0..n-1}`. The input need not be sorted
/// but its elements must be distinct.
pub fn rank_subset(s: &[usize], n: usize, r: usize) -> Result<u64> {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    check_subset(&sorted, n, r)?;
    Ok(sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| binomial(v, i + 1))
        .sum())
}

/// Inverse of [`rank_subset`]: the sorted `r`-subset with the given rank.
pub fn unrank_subset(mut rank: u64, n: usize, r: usize) -> Result<Vec<usize>> {
    let total = binomial(n, r);
    if rank >= total {
        return Err(Error::RankOutOfRange { rank, total });
    }
    let mut out = vec![0usize; r];
    let mut upper = n;
    for i in (0..r).rev() {
        // largest v < upper with C(v, i+1) <= rank
        let mut v = upper - 1;
        while binomial(v, i + 1) > rank {
            v -= 1;
        }
        out[i] = v;
        rank -= binomial(v, i + 1);
        upper = v;
    }
    Ok(out)
}

/// Advances a sorted subset of `{0..n-1}` to its colex successor in place.
/// Returns `false` (leaving `s` unspecified) once the last subset is passed.
pub fn next_colex(s: &mut [usize], n: usize) -> bool {
    let r = s.len();
    if r == 0 {
        return false;
    }
    let mut i = 0;
    while i + 1 < r && s[i] + 1 == s[i + 1] {
        i += 1;
    }
    if i + 1 == r && s[i] + 1 >= n {
        return false;
    }
    s[i] += 1;
    for (j, slot) in s.iter_mut().enumerate().take(i) {
        *slot = j;
    }
    true
}

/// Iterator over all `r`-subsets of `{0..n-1}` in colex (= rank) order.
#[derive(Clone, Debug)]
pub struct Subsets {
    current: Vec<usize>,
    n: usize,
    done: bool,
}

impl Subsets {
    pub fn new(n: usize, r: usize) -> Self {
        Subsets {
            current: (0..r).collect(),
            n,
            done: r > n,
        }
    }

    /// Starts the iteration at the subset of the given rank.
    pub fn starting_at(n: usize, r: usize, rank: u64) -> Self {
        match unrank_subset(rank, n, r) {
            Ok(current) => Subsets {
                current,
                n,
                done: false,
            },
            Err(_) => Subsets {
                current: Vec::new(),
                n,
                done: true,
            },
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        if !next_colex(&mut self.current, self.n) {
            self.done = true;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_subset(&[0, 1, 2], 5, 3).unwrap(), 0);
        assert_eq!(rank_subset(&[2, 3, 4], 5, 3).unwrap(), 9);
        assert_eq!(rank_subset(&[0, 2, 3], 5, 3).unwrap(), 2);
        assert_eq!(binomial(5, 3) - 1, 9);
    }

    #[test]
    fn rank_errors() {
        assert!(matches!(
            rank_subset(&[0, 5, 2], 5, 3),
            Err(Error::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(matches!(
            rank_subset(&[0, 1], 5, 3),
            Err(Error::WrongCardinality { .. })
        ));
        assert!(rank_subset(&[1, 1, 2], 5, 3).is_err());
        assert!(unrank_subset(10, 5, 3).is_err());
    }

    #[test]
    fn exhaustive_roundtrip_small() {
        for n in 0..=25 {
            for r in 1..=4usize.min(n) {
                let table = BinomialTable::new(n, r);
                for (expected, s) in Subsets::new(n, r).enumerate() {
                    let rank = rank_subset(&s, n, r).unwrap();
                    assert_eq!(rank, expected as u64);
                    assert_eq!(table.rank_sorted(&s), rank);
                    assert_eq!(unrank_subset(rank, n, r).unwrap(), s);
                }
                assert_eq!(Subsets::new(n, r).count() as u64, binomial(n, r));
            }
        }
    }

    #[test]
    fn rank_without_matches_direct() {
        let table = BinomialTable::new(12, 4);
        for s in Subsets::new(12, 4) {
            for skip in 0..4 {
                let mut sub = s.clone();
                sub.remove(skip);
                assert_eq!(table.rank_without(&s, skip), table.rank_sorted(&sub));
            }
        }
    }

    #[test]
    fn starting_at_resumes() {
        let tail: Vec<_> = Subsets::starting_at(7, 3, 30).collect();
        assert_eq!(tail.len(), 5);
        assert_eq!(rank_subset(&tail[0], 7, 3).unwrap(), 30);
    }

    #[test]
    fn binomial_saturates() {
        assert_eq!(binomial(10, 11), 0);
        assert_eq!(binomial(289, 4), 284_660_376);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
