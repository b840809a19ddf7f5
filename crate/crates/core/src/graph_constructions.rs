//! Connected colourings of complete graphs (`r = 2`).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::family::ColourSetFamily;
use crate::verify::{colour_set_family, is_connected_colouring, ConnectivityNotion};

/// Total number of path-building attempts before giving up.
pub const PATH_ATTEMPT_CAP: usize = 10_000;

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

#[inline]
fn circular_distance(a: usize, b: usize, n: usize) -> usize {
    let diff = a.abs_diff(b);
    diff.min(n - diff)
}

/// The colouring of `K_{2k+1}` in which `{x, y}` gets colour `i` when
/// `y - x = ±i (mod 2k+1)`. Each class is the Hamiltonian cycle
/// `0, i, 2i, ...`.
pub fn cyclic_prime_colouring(k: usize) -> Result<EdgeColouring> {
    let n = 2 * k + 1;
    if k == 0 || !is_prime(n) {
        return Err(Error::pre(format!("2k+1={n} not prime")));
    }
    EdgeColouring::from_fn(n, 2, k, |e| circular_distance(e[0], e[1], n) as Colour)
}

/// Removes vertex `v`; vertices above `v` shift down by one. Works for any
/// uniformity.
pub fn delete_vertex(c: &EdgeColouring, v: usize) -> Result<EdgeColouring> {
    let (n, r) = (c.n(), c.r());
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if n - 1 < r {
        return Err(Error::pre("deleting a vertex leaves fewer than r vertices"));
    }
    let mut buf = vec![0; r];
    let colours: Vec<Colour> = crate::subset::Subsets::new(n - 1, r)
        .map(|e| {
            for (slot, &x) in buf.iter_mut().zip(&e) {
                *slot = if x >= v { x + 1 } else { x };
            }
            c.colour_sorted(&buf)
        })
        .collect();
    EdgeColouring::from_ranked(n - 1, r, c.k(), colours).map_err(|e| match e {
        Error::UnusedColour(col) => Error::pre(format!(
            "colour class {col} vanishes when vertex {v} is deleted"
        )),
        other => other,
    })
}

/// Replaces vertex `i` of the base colouring by a class of `sizes[i]`
/// vertices (classes are consecutive). Edges between classes `i != j` take
/// the base colour of `{i, j}`; edges inside a class take the base colour of
/// `{0, 1}`.
pub fn blow_up(base: &EdgeColouring, sizes: &[usize]) -> Result<EdgeColouring> {
    if base.r() != 2 {
        return Err(Error::pre("blow_up is defined for graph colourings"));
    }
    let m = base.n();
    if m < 2 {
        return Err(Error::pre("blow_up needs a base with at least two vertices"));
    }
    if sizes.len() != m {
        return Err(Error::pre(format!("expected {m} class sizes, got {}", sizes.len())));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::pre(format!("vertex class {i} is empty")));
    }
    let class_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat(i).take(s))
        .collect();
    let inner = base.colour_sorted(&[0, 1]);
    EdgeColouring::from_fn(class_of.len(), 2, base.k(), |e| {
        let (i, j) = (class_of[e[0]], class_of[e[1]]);
        if i == j {
            inner
        } else {
            base.colour_sorted(&[i, j])
        }
    })
}

/// Verified preconditions of [`double_extension`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingHypotheses {
    pub n: usize,
    pub k: usize,
    pub special_colour: Colour,
    /// `v_1 .. v_n`: the special class is the cycle through these in order.
    pub cycle_order: Vec<usize>,
    /// The one colour shared by all edges `v_i v_{i+2}`.
    pub distance2_colour: Colour,
    /// Colour sets containing the special colour; always `k - 2`.
    pub special_count: usize,
    /// Size `l` of the whole colour-set family.
    pub family_size: usize,
}

/// Walks the class of `colour` as a Hamiltonian cycle, starting at the
/// lowest vertex toward its lower-indexed neighbour.
fn spanning_cycle_order(c: &EdgeColouring, colour: Colour) -> Option<Vec<usize>> {
    let n = c.n();
    let mut nbrs = vec![Vec::new(); n];
    for (e, col) in c.edges() {
        if col == colour {
            nbrs[e[0]].push(e[1]);
            nbrs[e[1]].push(e[0]);
        }
    }
    if n < 3 || nbrs.iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for _ in 0..n {
        if seen[cur] {
            return None;
        }
        seen[cur] = true;
        order.push(cur);
        let next = if prev == usize::MAX {
            *nbrs[cur].iter().min().unwrap()
        } else if nbrs[cur][0] == prev {
            nbrs[cur][1]
        } else {
            nbrs[cur][0]
        };
        prev = cur;
        cur = next;
    }
    (cur == 0).then_some(order)
}

/// Checks the four preconditions of the doubling extension with
/// `special_colour` in the role of the cycle colour.
pub fn check_doubling_hypotheses(c: &EdgeColouring, special_colour: Colour) -> Result<DoublingHypotheses> {
    if c.r() != 2 {
        return Err(Error::pre("doubling needs a graph colouring"));
    }
    if special_colour == 0 || special_colour as usize > c.k() {
        return Err(Error::ColourOutOfPalette {
            colour: special_colour,
            k: c.k(),
        });
    }
    if !is_connected_colouring(c, ConnectivityNotion::Graph)? {
        return Err(Error::pre("colouring is not connected"));
    }
    let n = c.n();
    let order = spanning_cycle_order(c, special_colour)
        .ok_or_else(|| Error::pre(format!("colour {special_colour} is not a spanning cycle")))?;
    let d2 = c.colour(&[order[0], order[2 % n]])?;
    for i in 0..n {
        if c.colour(&[order[i], order[(i + 2) % n]])? != d2 {
            return Err(Error::pre("distance-2 edges of the cycle are not monochromatic"));
        }
    }
    let family = colour_set_family(c)?;
    let special_count = family.degree(special_colour);
    if special_count + 2 != c.k() {
        return Err(Error::pre(format!(
            "colour {special_colour} lies in {special_count} colour sets, expected k-2={}",
            c.k() as isize - 2
        )));
    }
    Ok(DoublingHypotheses {
        n,
        k: c.k(),
        special_colour,
        cycle_order: order,
        distance2_colour: d2,
        special_count,
        family_size: family.len(),
    })
}

/// Doubles a colouring of `K_n` to `K_{2n}` with one new colour `k + 1`.
///
/// With `v_i` the cycle order, vertex `i` of the output is `x_i` and vertex
/// `n + i` is `y_i`. Both halves copy the input; `x_i y_j` takes the input
/// colour of `v_i v_j` unless `j` is `i` or `i + 1 (mod n)`, in which case it
/// gets the new colour, which then forms the cycle
/// `x_0 y_1 x_1 y_2 ... x_{n-1} y_0`.
pub fn double_extension(c: &EdgeColouring, hyp: &DoublingHypotheses) -> Result<EdgeColouring> {
    let n = c.n();
    let stale = || Error::pre("doubling hypotheses do not match this colouring");
    if hyp.n != n || hyp.k != c.k() || hyp.cycle_order.len() != n || c.r() != 2 {
        return Err(stale());
    }
    let v = &hyp.cycle_order;
    for i in 0..n {
        let next = v[(i + 1) % n];
        let skip = v[(i + 2) % n];
        if v[i] >= n
            || c.colour(&[v[i], next]).map_err(|_| stale())? != hyp.special_colour
            || c.colour(&[v[i], skip]).map_err(|_| stale())? != hyp.distance2_colour
        {
            return Err(stale());
        }
    }
    let k = c.k();
    let new_colour = (k + 1) as Colour;
    let base = |i: usize, j: usize| c.colour(&[v[i], v[j]]).expect("distinct cycle positions");
    EdgeColouring::from_fn(2 * n, 2, k + 1, |e| {
        let (a, b) = (e[0], e[1]);
        match (a < n, b < n) {
            (true, true) => base(a, b),
            (false, false) => base(a - n, b - n),
            // a < b, so a is x_i and b is y_j
            _ => {
                let (i, j) = (a, b - n);
                if j == i || j == (i + 1) % n {
                    new_colour
                } else {
                    base(i, j)
                }
            }
        }
    })
}

/// Output of [`upper_bound_pipeline`].
#[derive(Clone, Debug)]
pub struct PipelineResult {
    pub colouring: EdgeColouring,
    /// Largest `k0 <= k` with `2 k0 + 1` prime.
    pub k0: usize,
    pub predicted_count: usize,
    /// Enumerated colour-set family; its size equals `predicted_count`.
    pub family: ColourSetFamily,
}

/// `k0 (k0 - 2) / 3 + sum_{j = k0}^{k - 1} (j - 1)`.
pub fn predicted_pipeline_count(k: usize, k0: usize) -> usize {
    k0 * (k0 - 2) / 3 + (k0..k).map(|j| j - 1).sum::<usize>()
}

/// Largest `k0 <= k` with `2 k0 + 1` prime, found by a downward scan.
pub fn pipeline_base(k: usize) -> Option<usize> {
    (3..=k).rev().find(|&k0| is_prime(2 * k0 + 1))
}

/// Cyclic colouring for the largest admissible `k0 <= k`, doubled `k - k0`
/// times. The enumerated family size is checked against the prediction.
pub fn upper_bound_pipeline(k: usize) -> Result<PipelineResult> {
    if k < 3 {
        return Err(Error::pre("pipeline needs k >= 3"));
    }
    let k0 = pipeline_base(k).expect("k0 = 3 always qualifies");
    let mut c = cyclic_prime_colouring(k0)?;
    for step in k0..k {
        let hyp = check_doubling_hypotheses(&c, step as Colour)?;
        c = double_extension(&c, &hyp)?;
    }
    let family = colour_set_family(&c)?;
    let predicted_count = predicted_pipeline_count(k, k0);
    if family.len() != predicted_count {
        return Err(Error::Internal(format!(
            "pipeline({k}) realised {} colour sets, predicted {predicted_count}",
            family.len()
        )));
    }
    Ok(PipelineResult {
        colouring: c,
        k0,
        predicted_count,
        family,
    })
}

/// Union of the path classes, with a stamp-based breadth-first ball.
struct PathUnion {
    adj: Vec<Vec<u32>>,
    used: Vec<bool>,
    n: usize,
    stamp: Vec<u32>,
    epoch: u32,
}

impl PathUnion {
    fn new(n: usize) -> Self {
        PathUnion {
            adj: vec![Vec::new(); n],
            used: vec![false; n * n],
            n,
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    fn add(&mut self, a: usize, b: usize) {
        self.adj[a].push(b as u32);
        self.adj[b].push(a as u32);
        self.used[a * self.n + b] = true;
        self.used[b * self.n + a] = true;
    }

    fn remove(&mut self, a: usize, b: usize) {
        for (x, y) in [(a, b), (b, a)] {
            let pos = self.adj[x].iter().position(|&z| z as usize == y).expect("edge present");
            self.adj[x].swap_remove(pos);
        }
        self.used[a * self.n + b] = false;
        self.used[b * self.n + a] = false;
    }

    /// Marks every vertex within distance `radius` of `src` with the current
    /// epoch; returns the epoch.
    fn ball(&mut self, src: usize, radius: usize) -> u32 {
        self.epoch += 1;
        let epoch = self.epoch;
        self.stamp[src] = epoch;
        let mut frontier = vec![src];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if self.stamp[w as usize] != epoch {
                        self.stamp[w as usize] = epoch;
                        next.push(w as usize);
                    }
                }
            }
            frontier = next;
        }
        epoch
    }

    fn near(&self, v: usize, epoch: u32) -> bool {
        self.stamp[v] == epoch
    }
}

/// One attempt at a Hamiltonian path edge-disjoint from the union whose
/// edges close no cycle of length `<= girth_excluded`. Uses greedy random
/// extension with rotations when the endpoint is stuck. On failure the
/// union is restored.
fn try_path(union: &mut PathUnion, girth_excluded: usize, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let n = union.n;
    let radius = girth_excluded - 1;
    let mut path = vec![rng.gen_range(0..n)];
    let mut on_path = vec![false; n];
    on_path[path[0]] = true;
    let mut rotations_left = 20 * n;
    let undo = |union: &mut PathUnion, path: &[usize]| {
        for w in path.windows(2) {
            union.remove(w[0], w[1]);
        }
    };
    while path.len() < n {
        let end = *path.last().unwrap();
        let epoch = union.ball(end, radius);
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| !on_path[v] && !union.near(v, epoch))
            .collect();
        if let Some(&next) = candidates.choose(rng) {
            union.add(end, next);
            on_path[next] = true;
            path.push(next);
            continue;
        }
        // rotate: p_0..p_i p_t p_{t-1}..p_{i+1}, new endpoint p_{i+1}
        let t = path.len() - 1;
        let pivots: Vec<usize> = (0..t.saturating_sub(1))
            .filter(|&i| !union.near(path[i], epoch))
            .collect();
        match pivots.choose(rng) {
            Some(&i) if rotations_left > 0 => {
                rotations_left -= 1;
                union.remove(path[i], path[i + 1]);
                union.add(path[i], end);
                path[i + 1..].reverse();
            }
            _ => {
                undo(union, &path);
                return None;
            }
        }
    }
    Some(path)
}

/// `k - 1` edge-disjoint Hamiltonian paths whose union has no cycle of
/// length `<= girth_excluded`, coloured `1..k-1`; every other edge gets
/// colour `k`. Randomised but deterministic per `seed`.
pub fn paths_colouring(k: usize, n: usize, seed: u64, girth_excluded: usize) -> Result<EdgeColouring> {
    if k < 3 {
        return Err(Error::pre("paths colouring needs k >= 3"));
    }
    if girth_excluded < 3 {
        return Err(Error::pre("excluded girth must be at least 3"));
    }
    if n < 2 * k {
        return Err(Error::pre(format!(
            "n={n} < 2k={}: no connected {k}-colouring of K_n exists",
            2 * k
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut union = PathUnion::new(n);
    let mut labels = vec![0 as Colour; n * n];
    let mut attempts = 0;
    for colour in 1..k {
        let path = loop {
            if attempts >= PATH_ATTEMPT_CAP {
                return Err(Error::ConstructionFailed {
                    attempts,
                    reason: format!("could not place path {colour} of {}", k - 1),
                });
            }
            attempts += 1;
            if let Some(p) = try_path(&mut union, girth_excluded, &mut rng) {
                break p;
            }
        };
        for w in path.windows(2) {
            labels[w[0] * n + w[1]] = colour as Colour;
            labels[w[1] * n + w[0]] = colour as Colour;
        }
    }
    let c = EdgeColouring::from_fn(n, 2, k, |e| match labels[e[0] * n + e[1]] {
        0 => k as Colour,
        col => col,
    })?;
    let background = c.colour_class(k as Colour)?;
    if !crate::verify::is_connected(&background, ConnectivityNotion::Graph)?.passed() {
        return Err(Error::ConstructionFailed {
            attempts,
            reason: format!("background class {k} is disconnected"),
        });
    }
    Ok(c)
}
