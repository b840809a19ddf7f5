//! Exhaustive and budgeted searches over small instances.
//!
//! Budgets count search nodes (colour assignments, chosen sets or evaluated
//! moves), never wall time, so a run is reproducible on any machine. A report
//! with `complete == true` proves its optimum; a truncated report only
//! carries the best value found. Every witness is re-checked with the
//! deciders in [`crate::verify`] before a report is returned.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::{Colour, EdgeColouring};
use crate::dsu::{DisjointSet, RollbackDisjointSet};
use crate::error::{Error, Result};
use crate::family::ColourSetFamily;
use crate::hypergraph::Hypergraph;
use crate::hypergraph_constructions::minimal_3graph_edge_count;
use crate::partition::FixedBlockPartitions;
use crate::subset::{binomial, BinomialTable, Subsets};
use crate::verify::{
    colour_set_family, is_connected, is_connected_colouring, partition_condition, tricoloured_count,
    ConnectivityNotion, ScanMode,
};

/// Best object found by a search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SearchWitness {
    Colouring(EdgeColouring),
    Family(ColourSetFamily),
    Hypergraph(Hypergraph),
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub task: String,
    pub params: BTreeMap<String, u64>,
    /// Best value found; proven optimal when `complete` is set.
    pub optimum: Option<usize>,
    /// A priori lower bound used by the search.
    pub lower_bound: usize,
    pub witness: Option<SearchWitness>,
    pub nodes: u64,
    pub pruned: BTreeMap<String, u64>,
    /// Per-run results for searches made of independent runs.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub runs: Vec<Option<usize>>,
    pub elapsed_ms: u64,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SearchReport {
    fn new(task: &str, params: &[(&str, u64)], lower_bound: usize) -> Self {
        SearchReport {
            task: task.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            optimum: None,
            lower_bound,
            witness: None,
            nodes: 0,
            pruned: BTreeMap::new(),
            runs: Vec::new(),
            elapsed_ms: 0,
            complete: false,
            note: None,
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// The witness colouring, if the search produced one.
    pub fn colouring(&self) -> Option<&EdgeColouring> {
        match &self.witness {
            Some(SearchWitness::Colouring(c)) => Some(c),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<&ColourSetFamily> {
        match &self.witness {
            Some(SearchWitness::Family(f)) => Some(f),
            _ => None,
        }
    }

    pub fn hypergraph(&self) -> Option<&Hypergraph> {
        match &self.witness {
            Some(SearchWitness::Hypergraph(h)) => Some(h),
            _ => None,
        }
    }
}

/// `ceil(k(k-2)/3)`, the lower bound on the colour-set family of a connected
/// `k`-colouring.
pub fn family_lower_bound(k: usize) -> usize {
    (k * k.saturating_sub(2)).div_ceil(3)
}

/// Settings for [`min_multicoloured_triangles_with`].
#[derive(Clone, Debug)]
pub struct TriangleSearchOptions {
    /// Maximum number of colour assignments.
    pub budget: u64,
    /// Introduce colours only in first-use order.
    pub symmetry_breaking: bool,
    /// Prune on connectivity feasibility and on the incumbent. Without it
    /// every complete assignment is checked at the leaves.
    pub pruning: bool,
    pub workers: usize,
    /// Known connected colouring of the same `K_n`; its family size is the
    /// starting incumbent.
    pub incumbent: Option<EdgeColouring>,
}

impl TriangleSearchOptions {
    pub fn new(budget: u64) -> Self {
        TriangleSearchOptions {
            budget,
            symmetry_breaking: true,
            pruning: true,
            workers: 1,
            incumbent: None,
        }
    }
}

/// Minimum size of the colour-set family over connected `k`-colourings of
/// `K_n`, with default options.
pub fn min_multicoloured_triangles(k: usize, n: usize, budget: u64) -> Result<SearchReport> {
    min_multicoloured_triangles_with(k, n, &TriangleSearchOptions::new(budget))
}

struct TriangleProblem {
    n: usize,
    k: usize,
    pairs: Vec<(usize, usize)>,
    /// For edge `e`: the other two edges of each triangle whose last edge is `e`.
    closing: Vec<Vec<(usize, usize)>>,
    /// Component labels of the graph formed by edges `e..`, for each `e`.
    suffix_label: Vec<Vec<u8>>,
    suffix_components: Vec<usize>,
}

impl TriangleProblem {
    fn new(n: usize, k: usize) -> Self {
        let pairs: Vec<(usize, usize)> = Subsets::new(n, 2).map(|p| (p[0], p[1])).collect();
        let m = pairs.len();
        let table = BinomialTable::new(n, 2);
        let idx = |a: usize, b: usize| table.rank_sorted(&[a.min(b), a.max(b)]) as usize;
        let mut closing = vec![Vec::new(); m];
        for t in Subsets::new(n, 3) {
            let mut e = [idx(t[0], t[1]), idx(t[0], t[2]), idx(t[1], t[2])];
            e.sort_unstable();
            closing[e[2]].push((e[0], e[1]));
        }
        let mut suffix_label = vec![Vec::new(); m + 1];
        let mut suffix_components = vec![0; m + 1];
        let mut dsu = DisjointSet::new(n);
        for e in (0..=m).rev() {
            if e < m {
                dsu.union(pairs[e].0, pairs[e].1);
            }
            suffix_label[e] = (0..n).map(|v| dsu.find(v) as u8).collect();
            suffix_components[e] = dsu.components();
        }
        TriangleProblem {
            n,
            k,
            pairs,
            closing,
            suffix_label,
            suffix_components,
        }
    }

    fn m(&self) -> usize {
        self.pairs.len()
    }

    fn triple_index(&self, a: Colour, b: Colour, c: Colour) -> usize {
        let mut t = [a as usize - 1, b as usize - 1, c as usize - 1];
        t.sort_unstable();
        (t[0] * self.k + t[1]) * self.k + t[2]
    }
}

struct Shared<'a> {
    best: &'a AtomicUsize,
    nodes: &'a AtomicU64,
    exhausted: &'a AtomicBool,
    budget: u64,
}

struct TriangleDfs<'a> {
    p: &'a TriangleProblem,
    sym: bool,
    pruning: bool,
    colours: Vec<Colour>,
    classes: Vec<Vec<usize>>,
    tri_count: Vec<u32>,
    family: usize,
    used: usize,
    touched: Vec<Vec<usize>>,
    pruned_bound: u64,
    pruned_connectivity: u64,
    found: Option<(usize, Vec<Colour>)>,
    scratch: Vec<u32>,
}

impl<'a> TriangleDfs<'a> {
    fn new(p: &'a TriangleProblem, opts: &TriangleSearchOptions) -> Self {
        TriangleDfs {
            p,
            sym: opts.symmetry_breaking,
            pruning: opts.pruning,
            colours: vec![0; p.m()],
            classes: vec![Vec::new(); p.k + 1],
            tri_count: vec![0; p.k * p.k * p.k],
            family: 0,
            used: 0,
            touched: vec![Vec::new(); p.m()],
            pruned_bound: 0,
            pruned_connectivity: 0,
            found: None,
            scratch: vec![0; p.n],
        }
    }

    fn assign(&mut self, e: usize, c: Colour) {
        self.colours[e] = c;
        self.classes[c as usize].push(e);
        self.used = self.used.max(c as usize);
        let mut touched = std::mem::take(&mut self.touched[e]);
        touched.clear();
        for &(e1, e2) in &self.p.closing[e] {
            let (c1, c2) = (self.colours[e1], self.colours[e2]);
            if c1 != c2 && c1 != c && c2 != c {
                let t = self.p.triple_index(c, c1, c2);
                if self.tri_count[t] == 0 {
                    self.family += 1;
                }
                self.tri_count[t] += 1;
                touched.push(t);
            }
        }
        self.touched[e] = touched;
    }

    fn unassign(&mut self, e: usize, used_before: usize) {
        let c = self.colours[e];
        self.colours[e] = 0;
        self.classes[c as usize].pop();
        self.used = used_before;
        for &t in &self.touched[e] {
            self.tri_count[t] -= 1;
            if self.tri_count[t] == 0 {
                self.family -= 1;
            }
        }
    }

    /// Whether class `c` together with the edges from `next` on can still be
    /// spanning-connected.
    fn class_feasible(&mut self, c: usize, next: usize) -> bool {
        let label = &self.p.suffix_label[next];
        let parent = &mut self.scratch;
        for (v, slot) in parent.iter_mut().enumerate() {
            *slot = v as u32;
        }
        fn find(parent: &mut [u32], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut components = self.p.suffix_components[next];
        for &e in &self.classes[c] {
            let (a, b) = self.p.pairs[e];
            let (ra, rb) = (
                find(parent, label[a] as usize),
                find(parent, label[b] as usize),
            );
            if ra != rb {
                parent[rb] = ra as u32;
                components -= 1;
            }
        }
        components == 1
    }

    fn all_feasible(&mut self, next: usize, except: Colour) -> bool {
        (1..=self.p.k).all(|c| c == except as usize || self.class_feasible(c, next))
    }

    fn go(&mut self, e: usize, shared: &Shared<'_>) {
        if shared.exhausted.load(Ordering::Relaxed) {
            return;
        }
        let m = self.p.m();
        if e == m {
            if !self.pruning && !self.all_feasible(m, 0) {
                return;
            }
            if shared.best.fetch_min(self.family, Ordering::AcqRel) > self.family {
                self.found = Some((self.family, self.colours.clone()));
            }
            return;
        }
        let top = if self.sym {
            self.p.k.min(self.used + 1)
        } else {
            self.p.k
        };
        for c in 1..=top as Colour {
            if shared.nodes.fetch_add(1, Ordering::Relaxed) >= shared.budget {
                shared.exhausted.store(true, Ordering::Relaxed);
                return;
            }
            let used_before = self.used;
            self.assign(e, c);
            let keep = if !self.pruning {
                true
            } else if self.family >= shared.best.load(Ordering::Acquire) {
                self.pruned_bound += 1;
                false
            } else if !self.all_feasible(e + 1, c) {
                self.pruned_connectivity += 1;
                false
            } else {
                true
            };
            if keep {
                self.go(e + 1, shared);
            }
            self.unassign(e, used_before);
        }
    }
}

/// Prefixes of the first `depth` edges that survive first-use ordering.
fn triangle_prefixes(k: usize, depth: usize, sym: bool) -> Vec<Vec<Colour>> {
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in out {
            let used = p.iter().copied().max().unwrap_or(0) as usize;
            let top = if sym { k.min(used + 1) } else { k };
            for c in 1..=top as Colour {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Depth-first search over the edges of `K_n` in colex order for a connected
/// `k`-colouring with the fewest multicoloured-triangle colour sets.
pub fn min_multicoloured_triangles_with(k: usize, n: usize, opts: &TriangleSearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if k < 3 {
        return Err(Error::pre("need k >= 3"));
    }
    if n < 2 * k {
        return Err(Error::pre(format!(
            "no connected {k}-colouring of K_{n} exists (need n >= {})",
            2 * k
        )));
    }
    if k > crate::colouring::MAX_COLOURS || n > 64 {
        return Err(Error::pre("instance too large"));
    }
    let mut report = SearchReport::new(
        "min-multicoloured-triangles",
        &[("k", k as u64), ("n", n as u64), ("budget", opts.budget)],
        family_lower_bound(k),
    );
    let problem = TriangleProblem::new(n, k);
    let best = AtomicUsize::new(usize::MAX);
    if let Some(inc) = &opts.incumbent {
        if (inc.n(), inc.r(), inc.k()) != (n, 2, k) {
            return Err(Error::pre("incumbent has the wrong shape"));
        }
        if !is_connected_colouring(inc, ConnectivityNotion::Graph)? {
            return Err(Error::pre("incumbent is not connected"));
        }
        best.store(colour_set_family(inc)?.len(), Ordering::Release);
    }
    let nodes = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let shared = Shared {
        best: &best,
        nodes: &nodes,
        exhausted: &exhausted,
        budget: opts.budget,
    };
    let workers = opts.workers.max(1);
    let depth = if workers > 1 { problem.m().min(4) } else { 0 };
    let prefixes = triangle_prefixes(k, depth, opts.symmetry_breaking);
    let results = Mutex::new(Vec::new());
    let run = |(task, prefix): (usize, &Vec<Colour>)| {
        let mut dfs = TriangleDfs::new(&problem, opts);
        for (e, &c) in prefix.iter().enumerate() {
            dfs.assign(e, c);
        }
        let feasible = !dfs.pruning || (dfs.family < shared.best.load(Ordering::Acquire) && dfs.all_feasible(depth, 0));
        if feasible {
            dfs.go(depth, &shared);
        }
        results.lock().expect("no panics while held").push((
            task,
            dfs.found,
            dfs.pruned_bound,
            dfs.pruned_connectivity,
        ));
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| prefixes.par_iter().enumerate().for_each(run));

    let mut results = results.into_inner().expect("no panics while held");
    results.sort_by_key(|r| r.0);
    let mut witness: Option<(usize, Vec<Colour>)> = None;
    let (mut pb, mut pc) = (0, 0);
    for (_, found, b, c) in results {
        pb += b;
        pc += c;
        if let Some(f) = found {
            if witness.as_ref().map_or(true, |w| f.0 < w.0) {
                witness = Some(f);
            }
        }
    }
    report.nodes = nodes.load(Ordering::Relaxed).min(opts.budget);
    report.pruned.insert("bound".into(), pb);
    report.pruned.insert("connectivity".into(), pc);
    report.complete = !exhausted.load(Ordering::Relaxed);
    let colouring = match witness {
        Some((_, colours)) => Some(EdgeColouring::from_ranked(n, 2, k, colours)?),
        None => opts.incumbent.clone(),
    };
    if let Some(c) = colouring {
        let size = colour_set_family(&c)?.len();
        if !is_connected_colouring(&c, ConnectivityNotion::Graph)? || size != best.load(Ordering::Acquire) {
            return Err(Error::Internal("search witness failed re-verification".into()));
        }
        report.optimum = Some(size);
        report.witness = Some(SearchWitness::Colouring(c));
    }
    Ok(report.finish(start))
}

/// A connected `k`-colouring of `K_n` obtained by deleting vertices from the
/// pipeline colouring while every class stays connected, for use as a
/// starting incumbent. Deletion is depth-first, lowest vertex first; `None`
/// if no order of deletions reaches `n`.
pub fn pipeline_incumbent(k: usize, n: usize) -> Result<Option<EdgeColouring>> {
    fn shrink(c: EdgeColouring, n: usize, nodes: &mut u32) -> Result<Option<EdgeColouring>> {
        if c.n() == n {
            return Ok(Some(c));
        }
        for v in 0..c.n() {
            *nodes += 1;
            if *nodes > 100_000 {
                return Ok(None);
            }
            let Ok(smaller) = crate::graph_constructions::delete_vertex(&c, v) else {
                continue;
            };
            if is_connected_colouring(&smaller, ConnectivityNotion::Graph)? {
                if let Some(found) = shrink(smaller, n, nodes)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
    let base = crate::graph_constructions::upper_bound_pipeline(k)?.colouring;
    if n > base.n() {
        return Err(Error::pre(format!("pipeline colouring has only {} vertices", base.n())));
    }
    shrink(base, n, &mut 0)
}

struct PartitionDfs {
    k: usize,
    triples: Vec<[usize; 3]>,
    /// Partitions hit by each triple.
    hits: Vec<Vec<usize>>,
    /// Triples hitting each partition.
    hitters: Vec<Vec<usize>>,
    cover: Vec<u32>,
    uncovered: usize,
    forbidden: Vec<bool>,
    links: Vec<RollbackDisjointSet>,
    chosen: Vec<usize>,
    best: usize,
    best_family: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    pruned_bound: u64,
    dead_ends: u64,
}

impl PartitionDfs {
    fn add(&mut self, t: usize) {
        for &p in &self.hits[t] {
            if self.cover[p] == 0 {
                self.uncovered -= 1;
            }
            self.cover[p] += 1;
        }
        let [a, b, c] = self.triples[t];
        self.links[a].union(b, c);
        self.links[b].union(a, c);
        self.links[c].union(a, b);
        self.chosen.push(t);
    }

    fn remove(&mut self, t: usize) {
        for &p in &self.hits[t] {
            self.cover[p] -= 1;
            if self.cover[p] == 0 {
                self.uncovered += 1;
            }
        }
        let [a, b, c] = self.triples[t];
        for v in [a, b, c] {
            self.links[v].undo();
        }
        self.chosen.pop();
    }

    /// Each colour's link graph must end up connected on the other `k - 1`
    /// colours, and one more triple adds one edge to three links.
    fn lower_bound(&self) -> usize {
        let deficit: usize = self.links.iter().map(|l| l.components() - 2).sum();
        let extra = deficit.div_ceil(3).max(usize::from(self.uncovered > 0));
        self.chosen.len() + extra
    }

    fn go(&mut self) {
        if self.exhausted {
            return;
        }
        if self.nodes >= self.budget {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if self.lower_bound() >= self.best {
            self.pruned_bound += 1;
            return;
        }
        if self.uncovered == 0 {
            self.best = self.chosen.len();
            self.best_family = self.chosen.clone();
            return;
        }
        let mut pick: Option<(usize, usize)> = None;
        for (p, hitters) in self.hitters.iter().enumerate() {
            if self.cover[p] > 0 {
                continue;
            }
            let free = hitters.iter().filter(|&&t| !self.forbidden[t]).count();
            if pick.map_or(true, |(_, f)| free < f) {
                pick = Some((p, free));
            }
        }
        let (p, free) = pick.expect("some partition is uncovered");
        if free == 0 {
            self.dead_ends += 1;
            return;
        }
        let candidates: Vec<usize> = self.hitters[p].iter().copied().filter(|&t| !self.forbidden[t]).collect();
        for &t in &candidates {
            self.add(t);
            self.go();
            self.remove(t);
            // later branches exclude t, so each family is met once
            self.forbidden[t] = true;
        }
        for &t in &candidates {
            self.forbidden[t] = false;
        }
    }
}

/// Smallest family of 3-subsets of `{1..k}` meeting every partition of the
/// colours into three non-empty parts in a transversal.
pub fn min_partition_family(k: usize, budget: u64) -> Result<SearchReport> {
    let start = Instant::now();
    if !(3..=12).contains(&k) {
        return Err(Error::pre(format!("k={k} outside 3..=12")));
    }
    let mut report = SearchReport::new(
        "min-partition-family",
        &[("k", k as u64), ("budget", budget)],
        family_lower_bound(k),
    );
    let triples: Vec<[usize; 3]> = Subsets::new(k, 3).map(|t| [t[0], t[1], t[2]]).collect();
    let partitions: Vec<Vec<usize>> = FixedBlockPartitions::new(k, 3).collect();
    let mut hits = vec![Vec::new(); triples.len()];
    let mut hitters = vec![Vec::new(); partitions.len()];
    for (t, tr) in triples.iter().enumerate() {
        for (p, labels) in partitions.iter().enumerate() {
            let (a, b, c) = (labels[tr[0]], labels[tr[1]], labels[tr[2]]);
            if a != b && b != c && a != c {
                hits[t].push(p);
                hitters[p].push(t);
            }
        }
    }
    let mut dfs = PartitionDfs {
        k,
        cover: vec![0; partitions.len()],
        uncovered: partitions.len(),
        forbidden: vec![false; triples.len()],
        links: (0..k).map(|_| RollbackDisjointSet::new(k)).collect(),
        chosen: Vec::new(),
        // every triple together always works
        best: triples.len(),
        best_family: (0..triples.len()).collect(),
        nodes: 0,
        budget,
        exhausted: false,
        pruned_bound: 0,
        dead_ends: 0,
        triples,
        hits,
        hitters,
    };
    dfs.go();
    let family = ColourSetFamily::from_sets(
        dfs.k,
        dfs.best_family.iter().map(|&t| dfs.triples[t].map(|v| v as Colour + 1).to_vec()),
    )?;
    if !partition_condition(&family, k)?.ok {
        return Err(Error::Internal("search witness failed re-verification".into()));
    }
    report.optimum = Some(family.len());
    report.witness = Some(SearchWitness::Family(family));
    report.nodes = dfs.nodes;
    report.pruned.insert("bound".into(), dfs.pruned_bound);
    report.pruned.insert("dead-end".into(), dfs.dead_ends);
    report.complete = !dfs.exhausted;
    Ok(report.finish(start))
}

struct GraphDfs<'a> {
    edges: &'a [[usize; 3]],
    /// Ranks of the three pairs of each edge.
    faces: &'a [[usize; 3]],
    /// Largest edge index containing each pair.
    last_edge: &'a [usize],
    cover: Vec<u32>,
    dsu: RollbackDisjointSet,
    chosen: Vec<usize>,
    target: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    pruned: u64,
}

impl GraphDfs<'_> {
    fn add(&mut self, e: usize) {
        let [a, b, c] = self.faces[e];
        for f in [a, b, c] {
            self.cover[f] += 1;
        }
        self.dsu.union(a, b);
        self.dsu.union(a, c);
        self.chosen.push(e);
    }

    fn remove(&mut self, e: usize) {
        for f in self.faces[e] {
            self.cover[f] -= 1;
        }
        self.dsu.undo();
        self.dsu.undo();
        self.chosen.pop();
    }

    fn go(&mut self, from: usize) -> bool {
        let left = self.target - self.chosen.len();
        if left == 0 {
            return self.dsu.components() == 1;
        }
        // each edge merges at most two face classes
        if self.dsu.components() - 1 > 2 * left {
            self.pruned += 1;
            return false;
        }
        // an uncovered pair must be covered by an edge at or before its last one
        let mut limit = self.edges.len() - left;
        let mut uncovered = 0;
        for (f, &c) in self.cover.iter().enumerate() {
            if c == 0 {
                uncovered += 1;
                limit = limit.min(self.last_edge[f]);
            }
        }
        if uncovered > 3 * left {
            self.pruned += 1;
            return false;
        }
        for e in from..=limit {
            if self.nodes >= self.budget {
                self.exhausted = true;
                return false;
            }
            self.nodes += 1;
            self.add(e);
            let found = self.go(e + 1);
            if found {
                return true;
            }
            self.remove(e);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Fewest edges of a strongly connected 3-graph on `n` vertices. Sizes are
/// tried upwards from the covering bound `ceil(C(n,2)/3)`; adding edges keeps
/// a 3-graph strongly connected, so refuting every smaller size proves the
/// first size with a witness optimal. The first edge is fixed to `{0,1,2}`.
pub fn min_connected_3graph_edges(n: usize, budget: u64) -> Result<SearchReport> {
    let start = Instant::now();
    if !(3..=12).contains(&n) {
        return Err(Error::pre(format!("n={n} outside 3..=12")));
    }
    let pairs = binomial(n, 2) as usize;
    let lower = pairs.div_ceil(3);
    let mut report = SearchReport::new(
        "min-connected-3graph",
        &[("n", n as u64), ("budget", budget)],
        lower,
    );
    let table = BinomialTable::new(n, 2);
    let edges: Vec<[usize; 3]> = Subsets::new(n, 3).map(|e| [e[0], e[1], e[2]]).collect();
    let faces: Vec<[usize; 3]> = edges
        .iter()
        .map(|e| {
            [
                table.rank_sorted(&[e[0], e[1]]) as usize,
                table.rank_sorted(&[e[0], e[2]]) as usize,
                table.rank_sorted(&[e[1], e[2]]) as usize,
            ]
        })
        .collect();
    let mut last_edge = vec![0; pairs];
    for (i, f) in faces.iter().enumerate() {
        for &p in f {
            last_edge[p] = i;
        }
    }
    let mut nodes = 0;
    let mut pruned = 0;
    let mut exhausted = false;
    for target in lower..=minimal_3graph_edge_count(n) {
        let mut dfs = GraphDfs {
            edges: &edges,
            faces: &faces,
            last_edge: &last_edge,
            cover: vec![0; pairs],
            dsu: RollbackDisjointSet::new(pairs),
            chosen: Vec::new(),
            target,
            nodes: 0,
            budget: budget - nodes,
            exhausted: false,
            pruned: 0,
        };
        dfs.nodes += 1;
        dfs.add(0);
        let found = dfs.go(1);
        nodes += dfs.nodes;
        pruned += dfs.pruned;
        if found {
            let h = Hypergraph::new(n, 3, dfs.chosen.iter().map(|&e| edges[e].to_vec()))?;
            if !is_connected(&h, ConnectivityNotion::Strong)?.passed() || h.edge_count() != target {
                return Err(Error::Internal("search witness failed re-verification".into()));
            }
            report.optimum = Some(target);
            report.witness = Some(SearchWitness::Hypergraph(h));
            break;
        }
        if dfs.exhausted {
            exhausted = true;
            break;
        }
    }
    if report.optimum.is_none() && !exhausted {
        return Err(Error::Internal("no strongly connected 3-graph within the construction bound".into()));
    }
    report.nodes = nodes;
    report.pruned.insert("infeasible".into(), pruned);
    report.complete = !exhausted;
    Ok(report.finish(start))
}

/// Consecutive sideways moves allowed before a random kick.
pub const SIDEWAYS_CAP: u32 = 50;

struct HuntState {
    n: usize,
    colours: Vec<Colour>,
    /// Faces of each edge, as pair ranks.
    faces: Vec<[usize; 3]>,
    /// 4-sets containing each edge, as indices into `quads`.
    quads_of: Vec<Vec<usize>>,
    quads: Vec<[usize; 4]>,
    tricoloured: usize,
}

impl HuntState {
    fn quad_is_tricoloured(&self, q: usize) -> bool {
        let mut mask = 0u8;
        for &e in &self.quads[q] {
            mask |= 1 << self.colours[e];
        }
        mask.count_ones() == 3
    }

    fn count_all(&self) -> usize {
        (0..self.quads.len()).filter(|&q| self.quad_is_tricoloured(q)).count()
    }

    /// Total number of extra face components over the three classes.
    fn disconnection(&self) -> usize {
        let faces = binomial(self.n, 2) as usize;
        (1..=3)
            .map(|c| {
                let mut dsu = DisjointSet::new(faces);
                for (e, f) in self.faces.iter().enumerate() {
                    if self.colours[e] == c {
                        dsu.union(f[0], f[1]);
                        dsu.union(f[0], f[2]);
                    }
                }
                dsu.components() - 1
            })
            .sum()
    }

    fn recolour(&mut self, e: usize, c: Colour) {
        let before = self.quads_of[e].iter().filter(|&&q| self.quad_is_tricoloured(q)).count();
        self.colours[e] = c;
        let after = self.quads_of[e].iter().filter(|&&q| self.quad_is_tricoloured(q)).count();
        self.tricoloured = self.tricoloured + after - before;
    }
}

/// Randomised local search for a 3-colouring of `K_n^(3)` with every class
/// strongly connected and as few tricoloured 4-sets as possible. Each seed is
/// an independent run with `budget / seeds` moves. The search never claims
/// that no better colouring exists, so `complete` is always false unless
/// counting alone shows that no strongly connected 3-colouring exists.
pub fn tricoloured_counterexample_hunt(n: usize, k: usize, seeds: u64, budget: u64) -> Result<SearchReport> {
    let start = Instant::now();
    if k != 3 {
        return Err(Error::pre(format!("the hunt concerns 3-colourings, got k={k}")));
    }
    if !(4..=9).contains(&n) {
        return Err(Error::pre(format!("n={n} outside 4..=9")));
    }
    if seeds == 0 {
        return Err(Error::pre("need at least one seed"));
    }
    let mut report = SearchReport::new(
        "tricoloured-hunt",
        &[("n", n as u64), ("k", 3), ("seeds", seeds), ("budget", budget)],
        0,
    );
    let edge_total = binomial(n, 3) as usize;
    if 3 * minimal_3graph_edge_count(n) > edge_total {
        report.complete = true;
        report.note = Some(format!(
            "infeasible: each strongly connected class needs {} of the {edge_total} edges",
            minimal_3graph_edge_count(n)
        ));
        return Ok(report.finish(start));
    }
    let pair_table = BinomialTable::new(n, 2);
    let edge_table = BinomialTable::new(n, 3);
    let faces: Vec<[usize; 3]> = Subsets::new(n, 3)
        .map(|e| {
            [
                pair_table.rank_sorted(&[e[0], e[1]]) as usize,
                pair_table.rank_sorted(&[e[0], e[2]]) as usize,
                pair_table.rank_sorted(&[e[1], e[2]]) as usize,
            ]
        })
        .collect();
    let quads: Vec<[usize; 4]> = Subsets::new(n, 4)
        .map(|q| {
            let rank = |skip: usize| edge_table.rank_without(&q, skip) as usize;
            [rank(0), rank(1), rank(2), rank(3)]
        })
        .collect();
    let mut quads_of = vec![Vec::new(); edge_total];
    for (i, q) in quads.iter().enumerate() {
        for &e in q {
            quads_of[e].push(i);
        }
    }
    let per_seed = budget / seeds;
    let mut best: Option<(usize, Vec<Colour>)> = None;
    let mut rejected = 0;
    for seed in 0..seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = HuntState {
            n,
            colours: (0..edge_total).map(|_| rng.gen_range(1..=3)).collect(),
            faces: faces.clone(),
            quads_of: quads_of.clone(),
            quads: quads.clone(),
            tricoloured: 0,
        };
        s.tricoloured = s.count_all();
        let mut score = (s.disconnection(), s.tricoloured);
        let mut run_best: Option<usize> = None;
        let mut sideways = 0;
        for _ in 0..per_seed {
            report.nodes += 1;
            let e = rng.gen_range(0..edge_total);
            let old = s.colours[e];
            let new = if rng.gen_bool(0.5) { old % 3 + 1 } else { (old + 1) % 3 + 1 };
            s.recolour(e, new);
            let candidate = (s.disconnection(), s.tricoloured);
            let kick = sideways >= SIDEWAYS_CAP;
            let accept = if score.0 == 0 {
                candidate.0 == 0 && (candidate.1 <= score.1 || kick)
            } else {
                candidate <= score || kick
            };
            if !accept {
                s.recolour(e, old);
                rejected += 1;
                continue;
            }
            sideways = if candidate < score { 0 } else if kick { 0 } else { sideways + 1 };
            score = candidate;
            if score.0 == 0 {
                if run_best.map_or(true, |b| score.1 < b) {
                    run_best = Some(score.1);
                }
                if best.as_ref().map_or(true, |b| score.1 < b.0) {
                    best = Some((score.1, s.colours.clone()));
                }
            }
        }
        report.runs.push(run_best);
    }
    report.pruned.insert("rejected-moves".into(), rejected);
    if let Some((count, colours)) = best {
        let c = EdgeColouring::from_ranked(n, 3, 3, colours)?;
        let recount = tricoloured_count(&c, 3, ScanMode::Full)?.at_least as usize;
        if !is_connected_colouring(&c, ConnectivityNotion::Strong)? || recount != count {
            return Err(Error::Internal("hunt witness failed re-verification".into()));
        }
        report.optimum = Some(count);
        report.witness = Some(SearchWitness::Colouring(c));
    }
    Ok(report.finish(start))
}
