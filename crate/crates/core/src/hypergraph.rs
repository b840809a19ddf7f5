//! Plain `r`-uniform hypergraphs on `{0..n-1}`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::subset::{check_subset, BinomialTable};

/// An `r`-uniform edge set on `n` vertices.
///
/// Edges are stored flat (`r` vertices per edge, each edge sorted) and the
/// edge list is kept in colex order, so two hypergraphs with the same edge
/// set compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    vertices: Vec<u32>,
}

/// Serialised as `{n, r, edges}`.
impl serde::Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Hypergraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("edges", &self.edge_vecs())?;
        st.end()
    }
}

impl Hypergraph {
    /// Validating constructor: every edge must be an `r`-subset of
    /// `{0..n-1}` (any order) and no edge may repeat.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if r == 0 {
            return Err(Error::BadUniformity { n, r });
        }
        let binom = BinomialTable::new(n, r);
        let mut keyed = Vec::new();
        let mut seen = BTreeSet::new();
        for edge in edges {
            let mut e = edge.as_ref().to_vec();
            e.sort_unstable();
            check_subset(&e, n, r)?;
            let rank = binom.rank_sorted(&e);
            if !seen.insert(rank) {
                return Err(Error::pre(format!("duplicate edge {e:?}")));
            }
            keyed.push((rank, e));
        }
        keyed.sort_unstable();
        Ok(Self::from_colex_edges(n, r, keyed.into_iter().map(|(_, e)| e)))
    }

    /// Trusted constructor for edges already sorted, distinct and in colex
    /// order.
    pub(crate) fn from_colex_edges<I>(n: usize, r: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut vertices = Vec::new();
        for e in edges {
            vertices.extend(e.iter().map(|&v| v as u32));
        }
        Hypergraph { n, r, vertices }
    }

    pub fn empty(n: usize, r: usize) -> Self {
        Hypergraph {
            n,
            r,
            vertices: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().checked_div(self.r).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as sorted vertex slices, in colex order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.vertices.chunks_exact(self.r.max(1))
    }

    pub fn edge_vecs(&self) -> Vec<Vec<usize>> {
        self.edges()
            .map(|e| e.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn contains(&self, edge: &[usize]) -> bool {
        let mut e: Vec<u32> = edge.iter().map(|&v| v as u32).collect();
        e.sort_unstable();
        self.edges().any(|x| x == e.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_equality() {
        let a = Hypergraph::new(5, 3, [[2, 1, 0], [0, 3, 4], [1, 2, 3]]).unwrap();
        let b = Hypergraph::new(5, 3, [[1, 2, 3], [0, 1, 2], [4, 3, 0]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_vecs(), vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 3, 4]]);
        assert!(a.contains(&[4, 0, 3]));
        assert!(!a.contains(&[0, 1, 3]));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Hypergraph::new(4, 3, [[0, 1, 2], [2, 1, 0]]).is_err());
        assert!(Hypergraph::new(4, 3, [[0, 1, 4]]).is_err());
        assert!(Hypergraph::new(4, 3, [vec![0, 1]]).is_err());
        assert!(Hypergraph::new(4, 3, [[0, 1, 1]]).is_err());
    }

    #[test]
    fn empty_graph() {
        let h = Hypergraph::empty(2, 3);
        assert_eq!(h.edge_count(), 0);
        assert!(h.is_empty());
        assert_eq!(h.edges().count(), 0);
    }
}
