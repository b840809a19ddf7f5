//! Parallel enumeration of all `d`-subsets of `{0..n-1}`.
//!
//! Work is split by the largest element of the subset. Colex order sorts
//! first by the largest element, so merging per-split results in split order
//! reproduces a sequential colex scan; every reduction here is associative,
//! which makes results independent of the worker count.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::subset::next_colex;

/// Folds `visit` over every `d`-subset, split by top element.
///
/// `visit(acc, set)` receives each sorted subset; per-split accumulators are
/// combined left-to-right in colex order with `merge`.
pub(crate) fn fold_subsets<T, V, M>(n: usize, d: usize, init: impl Fn() -> T + Sync, visit: V, merge: M) -> T
where
    T: Send,
    V: Fn(&mut T, &[usize]) + Sync,
    M: Fn(T, T) -> T + Sync,
{
    if d == 0 || d > n {
        return init();
    }
    let per_top = |top: usize| {
        let mut acc = init();
        let mut set: Vec<usize> = (0..d).collect();
        set[d - 1] = top;
        loop {
            visit(&mut acc, &set);
            if d == 1 || !next_colex(&mut set[..d - 1], top) {
                break;
            }
        }
        acc
    };
    // rayon's ordered reduce keeps the left-to-right combination order
    (d - 1..n)
        .into_par_iter()
        .map(per_top)
        .reduce_with(&merge)
        .unwrap_or_else(init)
}

/// Sequential scan in colex order that stops when `visit` returns `true`.
/// Returns the number of subsets visited.
pub(crate) fn scan_until(n: usize, d: usize, mut visit: impl FnMut(&[usize]) -> bool) -> u64 {
    if d == 0 || d > n {
        return 0;
    }
    let mut set: Vec<usize> = (0..d).collect();
    let mut visited = 0;
    loop {
        visited += 1;
        if visit(&set) || !next_colex(&mut set, n) {
            return visited;
        }
    }
}

/// `samples` uniformly random `d`-subsets (with replacement between
/// samples), reproducible from `seed`.
pub(crate) fn random_subsets(n: usize, d: usize, samples: u64, seed: u64) -> impl Iterator<Item = Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(move |_| {
        let mut s = sample(&mut rng, n, d).into_vec();
        s.sort_unstable();
        s
    })
}
