//! Colourings of complete 3- and 4-uniform hypergraphs, and sparse strongly
//! connected 3-graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph_constructions::is_prime;
use crate::hypergraph::Hypergraph;
use crate::subset::{binomial, Subsets};
use crate::verify::{
    is_connected_colouring, multicoloured_family, tricoloured_count, ConnectivityNotion, ScanMode,
};

/// `k - 1` "step cycles" on `Z_n` plus a background class. Class `a`
/// (`1 <= a < k`) is `{ {ja, (j+1)a, (j+2)a} : j in Z_n }`; colour `k` takes
/// every other 3-set.
pub fn pointwise_cycles_colouring(k: usize, n: usize) -> Result<EdgeColouring> {
    if k < 2 {
        return Err(Error::pre("need at least two colours"));
    }
    if !is_prime(n) {
        return Err(Error::pre(format!("n={n} not prime")));
    }
    if n < 3 {
        return Err(Error::pre("n must be at least 3"));
    }
    let total = binomial(n, 3) as usize;
    let mut colours = vec![0 as Colour; total];
    let binom = crate::subset::BinomialTable::new(n, 3);
    for a in 1..k {
        for j in 0..n {
            let mut e = [j * a % n, (j + 1) * a % n, (j + 2) * a % n];
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::pre(format!("n={n} too small: step {a} collapses")));
            }
            let slot = &mut colours[binom.rank_sorted(&e) as usize];
            if *slot != 0 {
                return Err(Error::pre(format!(
                    "class overlap at n={n}: edge {e:?} lies in steps {} and {a}",
                    *slot
                )));
            }
            *slot = a as Colour;
        }
    }
    let mut background = 0;
    for slot in colours.iter_mut().filter(|s| **s == 0) {
        *slot = k as Colour;
        background += 1;
    }
    if background == 0 {
        return Err(Error::pre(format!("n={n} too small: background class is empty")));
    }
    EdgeColouring::from_ranked(n, 3, k, colours)
}

/// Number of vertices of the distance-type colouring.
pub const K17: usize = 17;

/// Sorted triple of circular distances on `Z_17`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DistanceType(pub [u8; 3]);

impl DistanceType {
    fn from_distances(mut d: [u8; 3]) -> Self {
        d.sort_unstable();
        DistanceType(d)
    }

    /// A type with a repeated distance.
    pub fn is_special(&self) -> bool {
        self.0[0] == self.0[1] || self.0[1] == self.0[2]
    }

    /// Entrywise multiplication mod 17, identifying `x` with `17 - x`.
    pub fn scaled(&self, m: usize) -> Self {
        let fold = |x: u8| {
            let y = (x as usize * m) % K17;
            y.min(K17 - y) as u8
        };
        Self::from_distances([fold(self.0[0]), fold(self.0[1]), fold(self.0[2])])
    }

    /// Whether some 3-subset of `Z_17` has this type.
    pub fn is_realisable(&self) -> bool {
        let [a, b, c] = self.0.map(i32::from);
        [1, -1].iter().any(|&s| [1, -1].iter().any(|&t| (a + s * b + t * c).rem_euclid(K17 as i32) == 0))
    }
}

impl std::fmt::Display for DistanceType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// Type of a 3-subset of `Z_17`.
pub fn type_of(edge: &[usize]) -> Result<DistanceType> {
    let mut e = edge.to_vec();
    e.sort_unstable();
    crate::subset::check_subset(&e, K17, 3)?;
    let d = |a: usize, b: usize| {
        let x = b - a;
        x.min(K17 - x) as u8
    };
    Ok(DistanceType::from_distances([d(e[0], e[1]), d(e[0], e[2]), d(e[1], e[2])]))
}

/// All 24 types that occur on 3-subsets of `Z_17`, sorted.
pub fn realisable_types() -> Vec<DistanceType> {
    let set: BTreeSet<DistanceType> = Subsets::new(K17, 3)
        .map(|e| type_of(&e).expect("valid edge"))
        .collect();
    set.into_iter().collect()
}

/// Types of the first colour class; class `m` is this set scaled by
/// `2^(m-1)`.
pub const K17_BASE_TYPES: [[u8; 3]; 6] = [[1, 1, 2], [3, 3, 6], [1, 4, 5], [2, 3, 5], [3, 4, 7], [4, 5, 8]];

/// The four type classes, each checked to be 6 types (2 special), together
/// partitioning the 24 realisable types.
pub fn k17_type_classes() -> Result<[Vec<DistanceType>; 4]> {
    let base: Vec<DistanceType> = K17_BASE_TYPES.iter().map(|&t| DistanceType(t)).collect();
    let mut classes: [Vec<DistanceType>; 4] = Default::default();
    for (m, class) in classes.iter_mut().enumerate() {
        let mut scaled: Vec<DistanceType> = base.iter().map(|t| t.scaled(1 << m)).collect();
        scaled.sort_unstable();
        scaled.dedup();
        *class = scaled;
    }
    let all = realisable_types();
    let union: BTreeSet<DistanceType> = classes.iter().flatten().copied().collect();
    let sizes_ok = classes
        .iter()
        .all(|c| c.len() == 6 && c.iter().filter(|t| t.is_special()).count() == 2);
    if all.len() != 24 || union.len() != 24 || union.iter().ne(all.iter()) || !sizes_ok {
        return Err(Error::Internal("distance types are not partitioned by the four classes".into()));
    }
    Ok(classes)
}

/// 4-colouring of `K_17^(3)`: an edge gets colour `m` when its type lies in
/// class `m` of [`k17_type_classes`].
pub fn k17_colouring() -> Result<EdgeColouring> {
    let classes = k17_type_classes()?;
    let mut lookup = std::collections::HashMap::new();
    for (m, class) in classes.iter().enumerate() {
        for t in class {
            lookup.insert(*t, m as Colour + 1);
        }
    }
    EdgeColouring::from_fn(K17, 3, 4, |e| lookup[&type_of(e).expect("valid edge")])
}

/// Preconditions of the strong blow-up: strongly connected, no
/// multicoloured 4-set.
fn check_strong_blowup_input(c: &EdgeColouring) -> Result<()> {
    if c.r() != 3 {
        return Err(Error::pre("strong blow-up needs a 3-graph colouring"));
    }
    if !is_connected_colouring(c, ConnectivityNotion::Strong)? {
        return Err(Error::pre("input colouring is not strongly connected"));
    }
    if c.n() >= 4 && multicoloured_family(c, 4, ScanMode::EarlyExit)?.count > 0 {
        return Err(Error::pre("input colouring has a multicoloured 4-set"));
    }
    Ok(())
}

fn check_covering_blowup_input(c: &EdgeColouring) -> Result<()> {
    if c.r() != 3 {
        return Err(Error::pre("covering blow-up needs a 3-graph colouring"));
    }
    if !is_connected_colouring(c, ConnectivityNotion::Covering)? {
        return Err(Error::pre("input colouring is not a covering colouring"));
    }
    if c.n() >= 4 && tricoloured_count(c, 3, ScanMode::EarlyExit)?.at_least > 0 {
        return Err(Error::pre("input colouring has a tricoloured 4-set"));
    }
    Ok(())
}

/// Vertex `v` of the `n^2`-vertex blow-up is `(block, index) = (v / n, v % n)`.
#[inline]
fn split3(e: &[usize], n: usize) -> ([usize; 3], [usize; 3]) {
    ([e[0] / n, e[1] / n, e[2] / n], [e[0] % n, e[1] % n, e[2] % n])
}

#[inline]
fn distinct3(x: [usize; 3]) -> bool {
    x[0] != x[1] && x[1] != x[2] && x[0] != x[2]
}

#[inline]
fn sorted3(mut x: [usize; 3]) -> [usize; 3] {
    x.sort_unstable();
    x
}

/// `(k+1)`-colouring of `K_{n^2}^(3)` from a strongly connected
/// `k`-colouring of `K_n^(3)` without multicoloured 4-sets:
///
/// * blocks all distinct: the input colour of the blocks;
/// * blocks not all distinct, indices all distinct: the input colour of the
///   indices;
/// * otherwise: the new colour `k + 1`.
pub fn strong_blowup(c: &EdgeColouring) -> Result<EdgeColouring> {
    check_strong_blowup_input(c)?;
    Ok(strong_blowup_unchecked(c))
}

pub(crate) fn strong_blowup_unchecked(c: &EdgeColouring) -> EdgeColouring {
    let n = c.n();
    let fresh = (c.k() + 1) as Colour;
    EdgeColouring::from_fn(n * n, 3, c.k() + 1, |e| {
        let (blocks, inner) = split3(e, n);
        if distinct3(blocks) {
            c.colour_sorted(&sorted3(blocks))
        } else if distinct3(inner) {
            c.colour_sorted(&sorted3(inner))
        } else {
            fresh
        }
    })
    .expect("blow-up uses every colour")
}

/// `(k+1)`-colouring of `K_{n^2}^(3)` from a covering `k`-colouring without
/// tricoloured 4-sets: blocks all distinct take the block colour, edges inside
/// one block take the inner colour, everything else gets `k + 1`.
pub fn covering_blowup(c: &EdgeColouring) -> Result<EdgeColouring> {
    check_covering_blowup_input(c)?;
    let n = c.n();
    let fresh = (c.k() + 1) as Colour;
    EdgeColouring::from_fn(n * n, 3, c.k() + 1, |e| {
        let (blocks, inner) = split3(e, n);
        if distinct3(blocks) {
            c.colour_sorted(&sorted3(blocks))
        } else if blocks[0] == blocks[1] && blocks[1] == blocks[2] {
            c.colour_sorted(&inner)
        } else {
            fresh
        }
    })
}

/// Smallest `n` for which both parity classes are coverings: below it some
/// 3-set has only one parity among the remaining vertices.
pub const PARITY_MIN_N: usize = 8;

/// 2-colouring of `K_n^(4)`: a 4-set takes `palette.0` when its vertex sum
/// is even and `palette.1` otherwise. The palette must be `{1, 2}` in either
/// order.
pub fn parity_covering_2colouring(n: usize, palette: (Colour, Colour)) -> Result<EdgeColouring> {
    if n < PARITY_MIN_N {
        return Err(Error::pre(format!("parity colouring is a covering only for n >= {PARITY_MIN_N}, got {n}")));
    }
    if !matches!(palette, (1, 2) | (2, 1)) {
        return Err(Error::pre("palette must be (1, 2) or (2, 1)"));
    }
    EdgeColouring::from_fn(n, 4, 2, |e| {
        if e.iter().sum::<usize>() % 2 == 0 {
            palette.0
        } else {
            palette.1
        }
    })
}

pub const RED: Colour = 1;
pub const BLUE: Colour = 2;
pub const GREEN: Colour = 3;

/// 3-colouring of `K_{n^2}^(4)` (red = 1, blue = 2, green = 3) from two
/// covering 2-colourings of `K_n^(4)`: `red_blue` (colour 1 read as red,
/// 2 as blue) and `blue_green` (1 as blue, 2 as green). With blocks
/// `i, j, p, q` of the four vertices:
///
/// * all distinct: `blue_green` on the blocks;
/// * all equal: `red_blue` on the indices;
/// * three distinct blocks: red;
/// * two blocks, two vertices each: blue;
/// * two blocks, three vertices and one: green.
pub fn covering_4graph_colouring(red_blue: &EdgeColouring, blue_green: &EdgeColouring) -> Result<EdgeColouring> {
    for (name, c) in [("red/blue", red_blue), ("blue/green", blue_green)] {
        if c.r() != 4 || c.k() != 2 {
            return Err(Error::pre(format!("{name} input must be a 2-colouring of a 4-graph")));
        }
        if !is_connected_colouring(c, ConnectivityNotion::Covering)? {
            return Err(Error::pre(format!("{name} input is not a covering colouring")));
        }
    }
    if red_blue.n() != blue_green.n() {
        return Err(Error::pre("inputs must have the same number of vertices"));
    }
    let n = red_blue.n();
    EdgeColouring::from_fn(n * n, 4, 3, |e| {
        let blocks = [e[0] / n, e[1] / n, e[2] / n, e[3] / n];
        let inner = [e[0] % n, e[1] % n, e[2] % n, e[3] % n];
        // e is sorted, so equal blocks are consecutive
        let distinct = 1 + blocks.windows(2).filter(|w| w[0] != w[1]).count();
        match distinct {
            4 => blue_green.colour_sorted(&blocks) + 1,
            1 => red_blue.colour_sorted(&inner),
            3 => RED,
            // two blocks: a 3+1 split shares the middle pair, a 2+2 split does not
            _ if blocks[1] == blocks[2] => GREEN,
            _ => BLUE,
        }
    })
}

/// `floor(C(n, 2) / 2)`.
pub fn minimal_3graph_edge_count(n: usize) -> usize {
    binomial(n, 2) as usize / 2
}

/// Strongly connected 3-graph on `n` vertices with `floor(C(n,2)/2)` edges.
///
/// Even `n` grows from `H_2` (no edges) or `H_4` (`K_4^(3)` minus an edge)
/// four vertices at a time; odd `n` adds an apex to `H_{n-1}`. With the
/// current vertices split into halves `x_1..x_h` and `y_1..y_h` (pair
/// `x_i y_i` = vertices `i-1` and `h+i-1`), the four-vertex step adds
/// `a, b, c, d` with edges `a x_i y_i`, `b x_i y_i (i < h)`, `c x_i y_i`,
/// `d x_i y_i`, `a b x_h`, `a b c`, `a c d`, `b d y_h`; the apex step adds
/// `a x_i y_i` for all `i`.
pub fn minimal_connected_3graph(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::pre("need n >= 2"));
    }
    let even = n - n % 2;
    let (mut m, mut edges): (usize, Vec<[usize; 3]>) = if even % 4 == 0 {
        (4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3]])
    } else {
        (2, Vec::new())
    };
    while m < even {
        let h = m / 2;
        let (a, b, c, d) = (m, m + 1, m + 2, m + 3);
        let pair = |i: usize| (i, h + i);
        for i in 0..h {
            let (x, y) = pair(i);
            edges.push([a, x, y]);
            if i + 1 < h {
                edges.push([b, x, y]);
            }
            edges.push([c, x, y]);
            edges.push([d, x, y]);
        }
        let (xh, yh) = pair(h - 1);
        edges.extend([[a, b, xh], [a, b, c], [a, c, d], [b, d, yh]]);
        m += 4;
    }
    if n % 2 == 1 {
        let h = m / 2;
        edges.extend((0..h).map(|i| [m, i, h + i]));
    }
    Hypergraph::new(n, 3, edges)
}
