//! Total colourings of the edges of a complete `r`-uniform hypergraph.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::subset::{binomial, check_subset, next_colex, unrank_subset, BinomialTable, Subsets};

/// Colours are 1-based; a `k`-colouring uses exactly the colours `1..=k`.
pub type Colour = u8;

/// Largest supported palette. Colour sets are handled as `u64` bitmasks.
pub const MAX_COLOURS: usize = 64;

/// Below this many edges, materialisation stays on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 16;

/// A colouring of all `r`-subsets of `{0..n-1}` with colours `1..=k`.
///
/// Colours are stored densely by colex rank. The value is immutable once
/// built, and every constructor checks that each colour of the palette
/// appears at least once.
#[derive(Clone)]
pub struct EdgeColouring {
    n: usize,
    r: usize,
    k: usize,
    colours: Vec<Colour>,
    binom: BinomialTable,
}

impl std::fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColouring")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("k", &self.k)
            .finish_non_exhaustive()
    }
}

impl PartialEq for EdgeColouring {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.k == other.k && self.colours == other.colours
    }
}

impl Eq for EdgeColouring {}

fn check_shape(n: usize, r: usize, k: usize) -> Result<()> {
    if r == 0 || n < r {
        return Err(Error::BadUniformity { n, r });
    }
    if k == 0 || k > MAX_COLOURS {
        return Err(Error::BadPalette(k));
    }
    Ok(())
}

/// Serialised as `{n, r, k, colours}` with colours in colex rank order.
impl serde::Serialize for EdgeColouring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EdgeColouring", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("colours", &self.colours)?;
        st.end()
    }
}

impl EdgeColouring {
    /// Builds a colouring from a colour table indexed by colex rank.
    pub fn from_ranked(n: usize, r: usize, k: usize, colours: Vec<Colour>) -> Result<Self> {
        check_shape(n, r, k)?;
        let expected = binomial(n, r);
        if colours.len() as u64 != expected {
            return Err(Error::WrongLength {
                expected,
                found: colours.len(),
            });
        }
        let mut used = vec![false; k + 1];
        for &c in &colours {
            if c == 0 || c as usize > k {
                return Err(Error::ColourOutOfPalette { colour: c, k });
            }
            used[c as usize] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::UnusedColour(missing as Colour));
        }
        Ok(EdgeColouring {
            n,
            r,
            k,
            colours,
            binom: BinomialTable::new(n, r + 1),
        })
    }

    /// Builds a colouring by evaluating `f` on every sorted `r`-subset.
    ///
    /// `f` must be a pure function of the edge: large tables are filled in
    /// parallel over contiguous rank ranges.
    pub fn from_fn<F>(n: usize, r: usize, k: usize, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> Colour + Sync,
    {
        check_shape(n, r, k)?;
        let total = binomial(n, r) as usize;
        let mut colours = vec![0 as Colour; total];
        let chunk = PARALLEL_THRESHOLD.max(total / (4 * rayon::current_num_threads().max(1)) + 1);
        let fill = |(i, slice): (usize, &mut [Colour])| {
            let mut edge = unrank_subset((i * chunk) as u64, n, r).expect("rank in range");
            for slot in slice.iter_mut() {
                *slot = f(&edge);
                next_colex(&mut edge, n);
            }
        };
        if total > PARALLEL_THRESHOLD {
            colours.par_chunks_mut(chunk).enumerate().for_each(fill);
        } else {
            colours.chunks_mut(chunk).enumerate().for_each(fill);
        }
        Self::from_ranked(n, r, k, colours)
    }

    /// The single-colour colouring of `K_n^(r)`.
    pub fn monochromatic(n: usize, r: usize) -> Result<Self> {
        Self::from_fn(n, r, 1, |_| 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.colours.len()
    }

    /// Colours in colex rank order.
    pub fn ranked_colours(&self) -> &[Colour] {
        &self.colours
    }

    pub(crate) fn binomials(&self) -> &BinomialTable {
        &self.binom
    }

    #[inline]
    pub fn colour_at_rank(&self, rank: u64) -> Colour {
        self.colours[rank as usize]
    }

    /// Colour of a sorted edge; no validation beyond debug assertions.
    #[inline]
    pub fn colour_sorted(&self, edge: &[usize]) -> Colour {
        debug_assert!(check_subset(edge, self.n, self.r).is_ok());
        self.colours[self.binom.rank_sorted(edge) as usize]
    }

    /// Colour of an edge given in any order.
    pub fn colour(&self, edge: &[usize]) -> Result<Colour> {
        let mut sorted = edge.to_vec();
        sorted.sort_unstable();
        check_subset(&sorted, self.n, self.r)?;
        Ok(self.colour_sorted(&sorted))
    }

    /// Iterates `(edge, colour)` pairs in colex order.
    pub fn edges(&self) -> impl Iterator<Item = (Vec<usize>, Colour)> + '_ {
        Subsets::new(self.n, self.r).zip(self.colours.iter().copied())
    }

    /// Number of edges of each colour, indexed by colour (entry 0 unused).
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k + 1];
        for &c in &self.colours {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// The hypergraph formed by the edges of colour `colour`.
    pub fn colour_class(&self, colour: Colour) -> Result<Hypergraph> {
        if colour == 0 || colour as usize > self.k {
            return Err(Error::ColourOutOfPalette { colour, k: self.k });
        }
        let edges = self
            .edges()
            .filter(|&(_, c)| c == colour)
            .map(|(edge, _)| edge);
        Ok(Hypergraph::from_colex_edges(self.n, self.r, edges))
    }

    /// Relabels colours through `perm`, where `perm[c - 1]` is the new name of
    /// colour `c`.
    pub fn permute_colours(&self, perm: &[Colour]) -> Result<Self> {
        if perm.len() != self.k {
            return Err(Error::pre("colour permutation has the wrong length"));
        }
        let mut seen = vec![false; self.k + 1];
        for &p in perm {
            if p == 0 || p as usize > self.k || seen[p as usize] {
                return Err(Error::pre("not a permutation of the palette"));
            }
            seen[p as usize] = true;
        }
        let colours = self.colours.iter().map(|&c| perm[c as usize - 1]).collect();
        Self::from_ranked(self.n, self.r, self.k, colours)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut colours = vec![0; self.colours.len()];
        let mut image = vec![0; self.r];
        for (rank, edge) in Subsets::new(self.n, self.r).enumerate() {
            for (slot, &v) in image.iter_mut().zip(&edge) {
                *slot = perm[v];
            }
            image.sort_unstable();
            colours[self.binom.rank_sorted(&image) as usize] = self.colours[rank];
        }
        Self::from_ranked(self.n, self.r, self.k, colours)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::pre(format!(
            "vertex map has {} entries, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::pre("vertex map is not a permutation"));
        }
        seen[p] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monochromatic_k4_class() {
        let c = EdgeColouring::monochromatic(4, 2).unwrap();
        let class = c.colour_class(1).unwrap();
        assert_eq!(class.edge_count(), 6);
        assert!(c.colour_class(2).is_err());
        assert!(c.colour_class(0).is_err());
    }

    #[test]
    fn classes_partition_edges() {
        let c = EdgeColouring::from_fn(9, 3, 4, |e| ((e[0] + 2 * e[1] + e[2]) % 4 + 1) as Colour)
            .unwrap();
        let total: usize = (1..=4).map(|i| c.colour_class(i).unwrap().edge_count()).sum();
        assert_eq!(total as u64, binomial(9, 3));
        assert_eq!(c.class_sizes().iter().sum::<usize>(), c.edge_count());
    }

    #[test]
    fn parallel_fill_matches_sequential() {
        let f = |e: &[usize]| ((e[0] * 7 + e[1] * 3 + e[2]) % 5 + 1) as Colour;
        let c = EdgeColouring::from_fn(90, 3, 5, f).unwrap();
        assert!(c.edge_count() > PARALLEL_THRESHOLD);
        for (edge, colour) in c.edges() {
            assert_eq!(colour, f(&edge));
        }
    }

    #[test]
    fn rejects_loose_palette_and_bad_colours() {
        assert_eq!(
            EdgeColouring::from_fn(4, 2, 2, |_| 1).unwrap_err(),
            Error::UnusedColour(2)
        );
        assert!(matches!(
            EdgeColouring::from_ranked(3, 2, 1, vec![1, 2, 1]),
            Err(Error::ColourOutOfPalette { .. })
        ));
        assert!(EdgeColouring::from_ranked(3, 2, 1, vec![1, 1]).is_err());
        assert!(EdgeColouring::monochromatic(2, 3).is_err());
    }

    #[test]
    fn colour_lookup_accepts_any_order() {
        let c = EdgeColouring::from_fn(5, 2, 2, |e| if e[1] - e[0] == 1 { 1 } else { 2 }).unwrap();
        assert_eq!(c.colour(&[3, 2]).unwrap(), 1);
        assert_eq!(c.colour(&[0, 4]).unwrap(), 2);
        assert!(c.colour(&[0, 5]).is_err());
    }
}
