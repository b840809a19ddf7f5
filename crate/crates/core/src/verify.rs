//! Deciders for connectivity of colour classes, enumeration of multicoloured
//! and tricoloured sets, and checks on colour-set families.
//!
//! Four connectivity notions are supported for an `r`-graph on `n` vertices:
//!
//! * [`ConnectivityNotion::Graph`]: `r = 2`, ordinary spanning connectivity.
//! * [`ConnectivityNotion::Pointwise`]: every vertex lies in an edge and the
//!   vertices are linked by chains of pairwise-intersecting edges.
//! * [`ConnectivityNotion::Strong`]: any two `(r-1)`-sets are joined by a
//!   strong path, a sequence of edges in which consecutive edges share
//!   exactly `r - 1` vertices.
//! * [`ConnectivityNotion::Covering`]: every `(r-1)`-set lies in an edge.
//!
//! Strong connectivity is decided with a disjoint-set forest over ranked
//! `(r-1)`-sets: each edge merges its `r` faces. Two distinct `r`-sets that
//! share an `(r-1)`-set meet in exactly `r - 1` vertices, so a chain of merges
//! is a strong path.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::colouring::{check_permutation, Colour, EdgeColouring};
use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::family::{mask_of, ColourMask, ColourSetFamily};
use crate::hypergraph::Hypergraph;
use crate::partition::FixedBlockPartitions;
use crate::scan::{fold_subsets, random_subsets, scan_until};
use crate::subset::{binomial, unrank_subset, BinomialTable, Subsets};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectivityNotion {
    Graph,
    Pointwise,
    Strong,
    Covering,
}

impl std::str::FromStr for ConnectivityNotion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(Self::Graph),
            "pointwise" => Ok(Self::Pointwise),
            "strong" => Ok(Self::Strong),
            "covering" => Ok(Self::Covering),
            other => Err(Error::pre(format!("unknown connectivity notion `{other}`"))),
        }
    }
}

impl std::fmt::Display for ConnectivityNotion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Graph => "graph",
            Self::Pointwise => "pointwise",
            Self::Strong => "strong",
            Self::Covering => "covering",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// `n < r`: there are no `r`-sets at all, so the notion is vacuous.
    DegenerateConnected,
}

impl Verdict {
    /// Degenerate verdicts are not failures.
    pub fn ok(self) -> bool {
        !matches!(self, Verdict::Fail)
    }
}

/// A sequence of edges, consecutive ones meeting in `r - 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPath {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
}

impl WitnessPath {
    /// Checks the path against `h` and its own endpoints.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let contains = |e: &[usize], s: &[usize]| s.iter().all(|v| e.contains(v));
        if self.edges.is_empty() {
            return false;
        }
        let r = h.r();
        self.edges.iter().all(|e| h.contains(e))
            && contains(&self.edges[0], &self.from)
            && contains(self.edges.last().unwrap(), &self.to)
            && self.edges.windows(2).all(|w| {
                w[0].iter().filter(|v| w[1].contains(v)).count() == r - 1
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Witness {
    /// A set (vertex or `(r-1)`-set) lying in no edge.
    Uncovered { set: Vec<usize> },
    /// Two sets in different components.
    Disconnected { from: Vec<usize>, to: Vec<usize> },
    /// A strong path demonstrating connectivity.
    Path(WitnessPath),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub notion: ConnectivityNotion,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl ConnectivityReport {
    pub fn ok(&self) -> bool {
        self.verdict.ok()
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn pass(notion: ConnectivityNotion, witness: Option<Witness>) -> Self {
        ConnectivityReport {
            notion,
            verdict: Verdict::Pass,
            witness,
        }
    }

    fn fail(notion: ConnectivityNotion, witness: Witness) -> Self {
        ConnectivityReport {
            notion,
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }
}

/// Decides connectivity of `h` in the given sense. FAIL always carries a
/// witness; a strong PASS carries a sample strong path between the first and
/// last `(r-1)`-sets.
pub fn is_connected(h: &Hypergraph, notion: ConnectivityNotion) -> Result<ConnectivityReport> {
    let (n, r) = (h.n(), h.r());
    if r < 2 {
        return Err(Error::BadUniformity { n, r });
    }
    if notion == ConnectivityNotion::Graph && r != 2 {
        return Err(Error::pre("graph connectivity needs r = 2"));
    }
    if n < r {
        return Ok(ConnectivityReport {
            notion,
            verdict: Verdict::DegenerateConnected,
            witness: None,
        });
    }
    Ok(match notion {
        ConnectivityNotion::Graph | ConnectivityNotion::Pointwise => pointwise(h, notion),
        ConnectivityNotion::Strong => strong(h),
        ConnectivityNotion::Covering => covering(h),
    })
}

fn pointwise(h: &Hypergraph, notion: ConnectivityNotion) -> ConnectivityReport {
    let n = h.n();
    let mut dsu = DisjointSet::new(n);
    let mut covered = vec![false; n];
    for e in h.edges() {
        for &v in e {
            covered[v as usize] = true;
            dsu.union(e[0] as usize, v as usize);
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return ConnectivityReport::fail(notion, Witness::Uncovered { set: vec![v] });
    }
    match (1..n).find(|&v| !dsu.same(0, v)) {
        Some(v) => ConnectivityReport::fail(
            notion,
            Witness::Disconnected {
                from: vec![0],
                to: vec![v],
            },
        ),
        None => ConnectivityReport::pass(notion, None),
    }
}

fn faces(edge: &[u32], binom: &BinomialTable, out: &mut Vec<u64>) {
    out.clear();
    let e: Vec<usize> = edge.iter().map(|&v| v as usize).collect();
    for skip in 0..e.len() {
        out.push(binom.rank_without(&e, skip));
    }
}

fn covering(h: &Hypergraph) -> ConnectivityReport {
    let (n, r) = (h.n(), h.r());
    let binom = BinomialTable::new(n, r);
    let mut covered = vec![false; binomial(n, r - 1) as usize];
    let mut buf = Vec::new();
    for e in h.edges() {
        faces(e, &binom, &mut buf);
        for &f in &buf {
            covered[f as usize] = true;
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(rank) => ConnectivityReport::fail(
            ConnectivityNotion::Covering,
            Witness::Uncovered {
                set: unrank_subset(rank as u64, n, r - 1).expect("rank in range"),
            },
        ),
        None => ConnectivityReport::pass(ConnectivityNotion::Covering, None),
    }
}

fn strong(h: &Hypergraph) -> ConnectivityReport {
    let (n, r) = (h.n(), h.r());
    let binom = BinomialTable::new(n, r);
    let nodes = binomial(n, r - 1) as usize;
    let mut dsu = DisjointSet::new(nodes);
    let mut covered = vec![false; nodes];
    let mut buf = Vec::new();
    for e in h.edges() {
        faces(e, &binom, &mut buf);
        for &f in &buf {
            covered[f as usize] = true;
            dsu.union(buf[0] as usize, f as usize);
        }
    }
    let unrank = |rank: usize| unrank_subset(rank as u64, n, r - 1).expect("rank in range");
    if let Some(rank) = covered.iter().position(|&c| !c) {
        return ConnectivityReport::fail(
            ConnectivityNotion::Strong,
            Witness::Uncovered { set: unrank(rank) },
        );
    }
    if let Some(rank) = (1..nodes).find(|&x| !dsu.same(0, x)) {
        return ConnectivityReport::fail(
            ConnectivityNotion::Strong,
            Witness::Disconnected {
                from: unrank(0),
                to: unrank(rank),
            },
        );
    }
    let path = strong_path(h, &unrank(0), &unrank(nodes - 1)).ok().flatten();
    ConnectivityReport::pass(ConnectivityNotion::Strong, path.map(Witness::Path))
}

/// Shortest strong path (by breadth-first search over `(r-1)`-sets) from an
/// edge containing `from` to an edge containing `to`. `Ok(None)` if none
/// exists.
pub fn strong_path(h: &Hypergraph, from: &[usize], to: &[usize]) -> Result<Option<WitnessPath>> {
    let (n, r) = (h.n(), h.r());
    let mut src = from.to_vec();
    let mut dst = to.to_vec();
    src.sort_unstable();
    dst.sort_unstable();
    crate::subset::check_subset(&src, n, r - 1)?;
    crate::subset::check_subset(&dst, n, r - 1)?;
    let binom = BinomialTable::new(n, r);
    let nodes = binomial(n, r - 1) as usize;

    // CSR incidence: face rank -> edges containing it
    let m = h.edge_count();
    let mut start = vec![0usize; nodes + 1];
    let mut buf = Vec::new();
    let edges: Vec<&[u32]> = h.edges().collect();
    for e in &edges {
        faces(e, &binom, &mut buf);
        for &f in &buf {
            start[f as usize + 1] += 1;
        }
    }
    for i in 0..nodes {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut incident = vec![0u32; m * r];
    for (idx, e) in edges.iter().enumerate() {
        faces(e, &binom, &mut buf);
        for &f in &buf {
            incident[fill[f as usize]] = idx as u32;
            fill[f as usize] += 1;
        }
    }

    let s = binom.rank_sorted(&src) as usize;
    let t = binom.rank_sorted(&dst) as usize;
    if start[s] == start[s + 1] || start[t] == start[t + 1] {
        return Ok(None);
    }
    // via[f] = (previous face, edge used to reach f)
    let mut via: Vec<Option<(u32, u32)>> = vec![None; nodes];
    let mut seen = vec![false; nodes];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(f) = queue.pop_front() {
        if f == t {
            break;
        }
        for &ei in &incident[start[f]..start[f + 1]] {
            faces(edges[ei as usize], &binom, &mut buf);
            for &g in &buf {
                let g = g as usize;
                if !seen[g] {
                    seen[g] = true;
                    via[g] = Some((f as u32, ei));
                    queue.push_back(g);
                }
            }
        }
    }
    if !seen[t] {
        return Ok(None);
    }
    let to_vec = |e: &[u32]| e.iter().map(|&v| v as usize).collect::<Vec<_>>();
    let mut used = Vec::new();
    let mut cur = t;
    while let Some((prev, ei)) = via[cur] {
        used.push(ei);
        cur = prev as usize;
    }
    used.reverse();
    let path_edges: Vec<Vec<usize>> = if used.is_empty() {
        // s == t: any edge containing it
        vec![to_vec(edges[incident[start[s]] as usize])]
    } else {
        used.iter().map(|&ei| to_vec(edges[ei as usize])).collect()
    };
    Ok(Some(WitnessPath {
        from: src,
        to: dst,
        edges: path_edges,
    }))
}

/// Connectivity report for every colour class of `c`.
pub fn colouring_connectivity(
    c: &EdgeColouring,
    notion: ConnectivityNotion,
) -> Result<Vec<(Colour, ConnectivityReport)>> {
    (1..=c.k() as Colour)
        .map(|colour| Ok((colour, is_connected(&c.colour_class(colour)?, notion)?)))
        .collect()
}

/// `true` iff every class passes (or is degenerate) in the given sense.
pub fn is_connected_colouring(c: &EdgeColouring, notion: ConnectivityNotion) -> Result<bool> {
    Ok(colouring_connectivity(c, notion)?
        .iter()
        .all(|(_, rep)| rep.ok()))
}

/// The sense of connectivity that the constructions target for uniformity
/// `r`: ordinary connectivity for graphs, strong connectivity otherwise.
pub fn default_notion(r: usize) -> ConnectivityNotion {
    if r == 2 {
        ConnectivityNotion::Graph
    } else {
        ConnectivityNotion::Strong
    }
}

/// How a `d`-set enumeration was carried out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum ScanMode {
    /// Every `d`-set.
    Full,
    /// Colex-order scan that stops at the first hit.
    EarlyExit,
    /// `samples` random `d`-sets drawn from `seed`; not a proof.
    Sampled { samples: u64, seed: u64 },
}

/// Colour mask of the sub-edges of a sorted `d`-set.
enum SubEdges<'a> {
    /// `r = 2`: dense `n x n` colour matrix.
    Graph { n: usize, matrix: Vec<Colour>, pairs: u32 },
    /// `d = r + 1`: the `d` faces, ranked by dropping one element.
    Facets { c: &'a EdgeColouring },
    /// Any other `(d, r)`: explicit position lists.
    Generic { c: &'a EdgeColouring, positions: Vec<Vec<usize>> },
}

impl<'a> SubEdges<'a> {
    fn new(c: &'a EdgeColouring, d: usize) -> Self {
        let (n, r) = (c.n(), c.r());
        if r == 2 {
            let mut matrix = vec![0; n * n];
            for (e, col) in c.edges() {
                matrix[e[0] * n + e[1]] = col;
                matrix[e[1] * n + e[0]] = col;
            }
            SubEdges::Graph {
                n,
                matrix,
                pairs: binomial(d, 2) as u32,
            }
        } else if d == r + 1 && d <= 8 {
            SubEdges::Facets { c }
        } else {
            SubEdges::Generic {
                c,
                positions: Subsets::new(d, r).collect(),
            }
        }
    }

    #[inline]
    fn mask(&self, set: &[usize]) -> ColourMask {
        let mut mask = 0;
        match self {
            SubEdges::Graph { n, matrix, .. } => {
                for (i, &a) in set.iter().enumerate() {
                    let row = &matrix[a * n..(a + 1) * n];
                    for &b in &set[i + 1..] {
                        mask |= mask_of(row[b]);
                    }
                }
            }
            SubEdges::Facets { c } => {
                let binom = c.binomials();
                // rank without position j = prefix(<j) + shifted suffix(>j)
                let d = set.len();
                let mut suffix = [0u64; 8];
                for j in (0..d - 1).rev() {
                    suffix[j] = suffix[j + 1] + binom.get(set[j + 1], j + 1);
                }
                let mut prefix = 0;
                for j in 0..d {
                    mask |= mask_of(c.colour_at_rank(prefix + suffix[j]));
                    prefix += binom.get(set[j], j + 1);
                }
            }
            SubEdges::Generic { c, positions } => {
                let binom = c.binomials();
                for pos in positions {
                    let rank: u64 = pos
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| binom.get(set[p], i + 1))
                        .sum();
                    mask |= mask_of(c.colour_at_rank(rank));
                }
            }
        }
        mask
    }

    fn count(&self) -> u32 {
        match self {
            SubEdges::Graph { pairs, .. } => *pairs,
            SubEdges::Facets { c } => c.r() as u32 + 1,
            SubEdges::Generic { positions, .. } => positions.len() as u32,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulticolouredReport {
    pub d: usize,
    pub mode: ScanMode,
    /// Number of multicoloured `d`-sets among those visited.
    pub count: u64,
    pub family: ColourSetFamily,
    /// Number of `d`-sets inspected; `C(n, d)` in full mode.
    pub visited: u64,
    /// First multicoloured set found, in colex order for full/early-exit.
    pub witness: Option<Vec<usize>>,
}

fn check_d(c: &EdgeColouring, d: usize) -> Result<()> {
    if d < c.r() || d > c.n() {
        return Err(Error::pre(format!(
            "d={d} out of range (need r={} <= d <= n={})",
            c.r(),
            c.n()
        )));
    }
    if binomial(d, c.r()) > 64 {
        return Err(Error::pre(format!("d={d} too large for r={}", c.r())));
    }
    Ok(())
}

#[derive(Default)]
struct MultiAcc {
    count: u64,
    visited: u64,
    masks: BTreeSet<ColourMask>,
    witness: Option<Vec<usize>>,
}

fn merge_multi(mut a: MultiAcc, b: MultiAcc) -> MultiAcc {
    a.count += b.count;
    a.visited += b.visited;
    a.masks.extend(b.masks);
    if a.witness.is_none() {
        a.witness = b.witness;
    }
    a
}

/// Colour sets of multicoloured `d`-sets: `d`-sets whose `C(d, r)` sub-edges
/// receive pairwise distinct colours.
pub fn multicoloured_family(c: &EdgeColouring, d: usize, mode: ScanMode) -> Result<MulticolouredReport> {
    check_d(c, d)?;
    let sub = SubEdges::new(c, d);
    let need = sub.count();
    let visit = |acc: &mut MultiAcc, set: &[usize]| {
        acc.visited += 1;
        let mask = sub.mask(set);
        if mask.count_ones() == need {
            acc.count += 1;
            acc.masks.insert(mask);
            if acc.witness.is_none() {
                acc.witness = Some(set.to_vec());
            }
        }
    };
    let acc = match mode {
        ScanMode::Full => fold_subsets(c.n(), d, MultiAcc::default, visit, merge_multi),
        ScanMode::EarlyExit => {
            let mut acc = MultiAcc::default();
            let visited = scan_until(c.n(), d, |set| {
                visit(&mut acc, set);
                acc.count > 0
            });
            acc.visited = visited;
            acc
        }
        ScanMode::Sampled { samples, seed } => {
            let mut acc = MultiAcc::default();
            for set in random_subsets(c.n(), d, samples, seed) {
                visit(&mut acc, &set);
            }
            acc
        }
    };
    Ok(MulticolouredReport {
        d,
        mode,
        count: acc.count,
        family: ColourSetFamily::from_masks(c.k(), acc.masks),
        visited: acc.visited,
        witness: acc.witness,
    })
}

/// Shorthand for the full-mode colour-set family of multicoloured triangles
/// (`r = 2`) or multicoloured `(r+1)`-sets.
pub fn colour_set_family(c: &EdgeColouring) -> Result<ColourSetFamily> {
    Ok(multicoloured_family(c, c.r() + 1, ScanMode::Full)?.family)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TricolouredReport {
    pub mode: ScanMode,
    pub threshold: usize,
    /// `(r+1)`-sets whose sub-edges use at least `threshold` colours.
    pub at_least: u64,
    /// `(r+1)`-sets whose sub-edges use exactly three colours.
    pub exactly_three: u64,
    pub visited: u64,
    /// Up to five witnesses, the first ones in colex order.
    pub witnesses: Vec<Vec<usize>>,
}

const MAX_WITNESSES: usize = 5;

/// Counts `(r+1)`-sets whose sub-edges span at least `threshold` colours.
pub fn tricoloured_count(c: &EdgeColouring, threshold: usize, mode: ScanMode) -> Result<TricolouredReport> {
    let d = c.r() + 1;
    check_d(c, d)?;
    let sub = SubEdges::new(c, d);
    #[derive(Default)]
    struct Acc {
        at_least: u64,
        exactly_three: u64,
        visited: u64,
        witnesses: Vec<Vec<usize>>,
    }
    let visit = |acc: &mut Acc, set: &[usize]| {
        acc.visited += 1;
        let used = sub.mask(set).count_ones() as usize;
        if used == 3 {
            acc.exactly_three += 1;
        }
        if used >= threshold {
            acc.at_least += 1;
            if acc.witnesses.len() < MAX_WITNESSES {
                acc.witnesses.push(set.to_vec());
            }
        }
    };
    let merge = |mut a: Acc, b: Acc| {
        a.at_least += b.at_least;
        a.exactly_three += b.exactly_three;
        a.visited += b.visited;
        let room = MAX_WITNESSES - a.witnesses.len();
        a.witnesses.extend(b.witnesses.into_iter().take(room));
        a
    };
    let acc = match mode {
        ScanMode::Full => fold_subsets(c.n(), d, Acc::default, visit, merge),
        ScanMode::EarlyExit => {
            let mut acc = Acc::default();
            acc.visited = scan_until(c.n(), d, |set| {
                visit(&mut acc, set);
                acc.at_least > 0
            });
            acc
        }
        ScanMode::Sampled { samples, seed } => {
            let mut acc = Acc::default();
            for set in random_subsets(c.n(), d, samples, seed) {
                visit(&mut acc, &set);
            }
            acc
        }
    };
    Ok(TricolouredReport {
        mode,
        threshold,
        at_least: acc.at_least,
        exactly_three: acc.exactly_three,
        visited: acc.visited,
        witnesses: acc.witnesses,
    })
}

/// Largest number of colours on the edges of any `d`-clique of a graph
/// colouring, with the first clique (colex order) attaining it.
pub fn max_colours_on_d_set(c: &EdgeColouring, d: usize) -> Result<(usize, Vec<usize>)> {
    if c.r() != 2 {
        return Err(Error::pre("max_colours_on_d_set needs a graph colouring (r = 2)"));
    }
    check_d(c, d)?;
    if d < 2 {
        return Err(Error::pre("d must be at least 2"));
    }
    let sub = SubEdges::new(c, d);
    let best = fold_subsets(
        c.n(),
        d,
        || (0usize, Vec::new()),
        |acc, set| {
            let used = sub.mask(set).count_ones() as usize;
            if used > acc.0 {
                *acc = (used, set.to_vec());
            }
        },
        |a, b| if b.0 > a.0 { b } else { a },
    );
    Ok(best)
}

/// Outcome of checking a colour-set family against the 3-partition
/// condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionVerdict {
    pub ok: bool,
    /// First partition (in restricted-growth order) that no member meets in
    /// all three parts.
    pub unhit: Option<[Vec<Colour>; 3]>,
    pub partitions_checked: u64,
}

fn blocks_of(labels: &[usize]) -> [Vec<Colour>; 3] {
    let mut out: [Vec<Colour>; 3] = Default::default();
    for (i, &l) in labels.iter().enumerate() {
        out[l].push(i as Colour + 1);
    }
    out
}

fn check_triples(f: &ColourSetFamily, k: usize) -> Result<Vec<[usize; 3]>> {
    if k < 3 {
        return Err(Error::pre("the partition condition needs k >= 3"));
    }
    f.iter()
        .map(|s| {
            if s.len() != 3 || s.iter().any(|&c| c == 0 || c as usize > k) {
                Err(Error::pre(format!("{s:?} is not a 3-subset of 1..={k}")))
            } else {
                Ok([s[0] as usize - 1, s[1] as usize - 1, s[2] as usize - 1])
            }
        })
        .collect()
}

/// Checks that every partition of `{1..k}` into three non-empty parts has a
/// member of `f` meeting all three parts.
pub fn partition_condition(f: &ColourSetFamily, k: usize) -> Result<PartitionVerdict> {
    let triples = check_triples(f, k)?;
    let mut checked = 0;
    for labels in FixedBlockPartitions::new(k, 3) {
        checked += 1;
        let hit = triples.iter().any(|t| {
            let (a, b, c) = (labels[t[0]], labels[t[1]], labels[t[2]]);
            a != b && b != c && a != c
        });
        if !hit {
            return Ok(PartitionVerdict {
                ok: false,
                unhit: Some(blocks_of(&labels)),
                partitions_checked: checked,
            });
        }
    }
    Ok(PartitionVerdict {
        ok: true,
        unhit: None,
        partitions_checked: checked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkProfile {
    pub colour: Colour,
    /// Members of the family containing `colour`.
    pub degree: usize,
    /// Whether the link graph on the other `k - 1` colours is connected.
    pub link_connected: bool,
}

/// Degree and link connectivity of every colour. The link of `i` is the
/// graph on `{1..k} \ {i}` with an edge `A \ {i}` for each member `A ∋ i`.
pub fn link_connectivity_profile(f: &ColourSetFamily, k: usize) -> Result<Vec<LinkProfile>> {
    let triples = check_triples(f, k)?;
    Ok((0..k)
        .map(|i| {
            let mut dsu = DisjointSet::new(k);
            let mut degree = 0;
            for t in triples.iter().filter(|t| t.contains(&i)) {
                degree += 1;
                let rest: Vec<usize> = t.iter().copied().filter(|&x| x != i).collect();
                dsu.union(rest[0], rest[1]);
            }
            // the link lives on k-1 vertices; i itself is a singleton
            LinkProfile {
                colour: i as Colour + 1,
                degree,
                link_connected: dsu.components() == 2,
            }
        })
        .collect())
}

/// Constructive form of the degree bound for one colour: partitions of the
/// shape `{i} | S | rest` with `S` grown one colour at a time force `k - 2`
/// distinct members through `i`. Returns those members, or the unhit
/// partition if the chain breaks.
pub fn singleton_chain(
    f: &ColourSetFamily,
    k: usize,
    colour: Colour,
) -> Result<std::result::Result<Vec<Vec<Colour>>, [Vec<Colour>; 3]>> {
    let triples = check_triples(f, k)?;
    let i = colour as usize;
    if i == 0 || i > k {
        return Err(Error::ColourOutOfPalette { colour, k });
    }
    let i = i - 1;
    let mut grown = vec![false; k];
    let first = (0..k).find(|&x| x != i).expect("k >= 3");
    grown[first] = true;
    let mut chain = Vec::new();
    for _ in 0..k - 2 {
        let found = triples.iter().find(|t| {
            t.contains(&i) && {
                let rest: Vec<usize> = t.iter().copied().filter(|&x| x != i).collect();
                grown[rest[0]] != grown[rest[1]]
            }
        });
        match found {
            Some(t) => {
                for &x in t {
                    if x != i {
                        grown[x] = true;
                    }
                }
                chain.push(t.iter().map(|&x| x as Colour + 1).collect());
            }
            None => {
                let labels: Vec<usize> = (0..k)
                    .map(|x| if x == i { 0 } else if grown[x] { 1 } else { 2 })
                    .collect();
                return Ok(Err(blocks_of(&labels)));
            }
        }
    }
    Ok(Ok(chain))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismVerdict {
    pub ok: bool,
    /// An edge whose image has the wrong colour: (edge, colour, image colour).
    pub counterexample: Option<(Vec<usize>, Colour, Colour)>,
}

/// Checks that `vertex_map` carries colour class `m` onto class
/// `(m mod k) + 1` for every `m`.
pub fn classes_isomorphic_under(c: &EdgeColouring, vertex_map: &[usize]) -> Result<IsomorphismVerdict> {
    check_permutation(vertex_map, c.n())?;
    let k = c.k() as Colour;
    let mut image = vec![0; c.r()];
    for (edge, colour) in c.edges() {
        for (slot, &v) in image.iter_mut().zip(&edge) {
            *slot = vertex_map[v];
        }
        image.sort_unstable();
        let mapped = c.colour_sorted(&image);
        if mapped != colour % k + 1 {
            return Ok(IsomorphismVerdict {
                ok: false,
                counterexample: Some((edge, colour, mapped)),
            });
        }
    }
    Ok(IsomorphismVerdict {
        ok: true,
        counterexample: None,
    })
}

/// The auxiliary "face graph" bound for strongly connected `r`-graphs: the
/// `C(n, r-1)` faces stay connected when each edge contributes only the
/// `r - 1` links of a path through its faces, so a connected `h` needs at
/// least `ceil((C(n, r-1) - 1) / (r - 1))` edges (`floor(C(n,2)/2)` for
/// `r = 3`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceGraphBound {
    pub faces: u64,
    /// Links kept: `(r - 1) * |E|`.
    pub links: u64,
    /// Whether the face graph built from the kept links is connected.
    pub connected: bool,
    pub edge_lower_bound: u64,
}

impl FaceGraphBound {
    /// A connected face graph needs `faces - 1` links.
    pub fn consistent(&self) -> bool {
        !self.connected || self.links + 1 >= self.faces
    }
}

pub fn face_graph_bound(h: &Hypergraph) -> Result<FaceGraphBound> {
    let (n, r) = (h.n(), h.r());
    if r < 2 || n < r {
        return Err(Error::BadUniformity { n, r });
    }
    let binom = BinomialTable::new(n, r);
    let faces_total = binomial(n, r - 1);
    let mut dsu = DisjointSet::new(faces_total as usize);
    let mut buf = Vec::new();
    for e in h.edges() {
        faces(e, &binom, &mut buf);
        for w in buf.windows(2) {
            dsu.union(w[0] as usize, w[1] as usize);
        }
    }
    Ok(FaceGraphBound {
        faces: faces_total,
        links: (r as u64 - 1) * h.edge_count() as u64,
        connected: dsu.components() == 1,
        edge_lower_bound: (faces_total - 1).div_ceil(r as u64 - 1),
    })
}

/// Tally of colour-set degrees, `colour -> number of members containing it`.
pub fn family_degrees(f: &ColourSetFamily) -> BTreeMap<Colour, usize> {
    let mut out: BTreeMap<Colour, usize> = (1..=f.k() as Colour).map(|c| (c, 0)).collect();
    for s in f.iter() {
        for c in s {
            *out.entry(*c).or_default() += 1;
        }
    }
    out
}
