//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitsets, together with the exact predicates used throughout the crate:
//! planarity, k-connectivity, radius, degree sequences and canonical forms.

mod blocks;
mod canon;
mod graph6;
mod planarity;
mod sequence;

pub use blocks::{articulation_points, biconnected_blocks};
pub use canon::{canonical_labeling, CanonicalForm};
pub use sequence::DegreeSequence;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph with 0-based contiguous vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct PolytopeGraph {
    adj: Vec<u64>,
}

/// Adjacency-list JSON form `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for PolytopeGraph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Self> {
        PolytopeGraph::from_edges(value.n, value.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<PolytopeGraph> for GraphJson {
    fn from(g: PolytopeGraph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl PolytopeGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(PolytopeGraph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::ParallelEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Wheel on `n` vertices: hub `n - 1` joined to the cycle `0..n-1`.
    pub fn wheel(n: usize) -> Result<Self> {
        let rim = n - 1;
        let mut g = Self::cycle(rim)?;
        g.adj.push(0);
        for v in 0..rim {
            g.add_edge(v, rim)?;
        }
        Ok(g)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// Disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &PolytopeGraph) -> Result<Self> {
        let shift = self.vertex_count();
        let mut g = Self::empty(shift + other.vertex_count())?;
        g.adj[..shift].copy_from_slice(&self.adj);
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift)?;
        }
        Ok(g)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut adj = vec![0u64; self.vertex_count()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        PolytopeGraph { adj }
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![0u64; vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for w in bits(self.adj[v]) {
                if index[w] != usize::MAX {
                    adj[i] |= 1 << index[w];
                }
            }
        }
        PolytopeGraph { adj }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Vertices reachable from some vertex of `start` inside `allowed`.
    pub(crate) fn reach(&self, start: u64, allowed: u64) -> u64 {
        let mut seen = start & allowed;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `mask` is connected (empty counts as
    /// connected).
    pub(crate) fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask & mask.wrapping_neg();
        self.reach(start, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(full_mask(self.vertex_count()))
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut left = full_mask(self.vertex_count());
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let comp = self.reach(start, left);
            left &= !comp;
            out.push(bits(comp).collect());
        }
        out
    }

    /// True iff the graph has more than `k` vertices and no vertex cut of size
    /// below `k`. Every candidate cut is tried, which is fine at desk scale.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.vertex_count();
        if n <= k {
            return false;
        }
        fn cuts(g: &PolytopeGraph, alive: u64, from: usize, left: usize) -> bool {
            if !g.is_connected_within(alive) {
                return false;
            }
            if left == 0 {
                return true;
            }
            (from..g.vertex_count())
                .filter(|&v| alive >> v & 1 == 1)
                .all(|v| cuts(g, alive & !(1 << v), v + 1, left - 1))
        }
        cuts(self, full_mask(n), 0, k - 1)
    }

    /// Eccentricity of `v`, or `None` when some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let all = full_mask(self.vertex_count());
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        let mut depth = 0;
        while seen != all {
            let mut next = 0;
            for w in bits(frontier) {
                next |= self.adj[w];
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
        Some(depth)
    }

    pub fn radius(&self) -> Result<usize> {
        (0..self.vertex_count())
            .map(|v| self.eccentricity(v).ok_or(Error::InfiniteRadius))
            .try_fold(None, |best: Option<usize>, e| {
                e.map(|e| Some(best.map_or(e, |b| b.min(e))))
            })?
            .ok_or(Error::InfiniteRadius)
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    pub fn is_planar(&self) -> bool {
        planarity::is_planar(self)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_labeling(self).0
    }

    pub fn is_isomorphic(&self, other: &PolytopeGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self> {
        graph6::decode(text)
    }

    /// Whether the graph is acyclic.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.vertex_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sequences_of_small_graphs() {
        let w5 = PolytopeGraph::wheel(5).unwrap();
        assert_eq!(w5.degree_sequence().entries(), &[4, 3, 3, 3, 3]);
        let e3 = PolytopeGraph::empty(3).unwrap();
        assert_eq!(e3.degree_sequence().entries(), &[0, 0, 0]);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            PolytopeGraph::from_edges(3, [(0, 0)]).unwrap_err(),
            Error::Loop(0)
        );
        assert_eq!(
            PolytopeGraph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err(),
            Error::ParallelEdge(0, 1)
        );
        assert!(matches!(
            PolytopeGraph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(PolytopeGraph::empty(65).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(PolytopeGraph::wheel(6).unwrap().is_k_connected(3));
        assert!(!PolytopeGraph::path(3).unwrap().is_k_connected(2));
        assert!(PolytopeGraph::complete(4).unwrap().is_k_connected(3));
        assert!(!PolytopeGraph::complete(3).unwrap().is_k_connected(3));
        assert!(PolytopeGraph::cycle(5).unwrap().is_k_connected(2));
        assert!(!PolytopeGraph::cycle(5).unwrap().is_k_connected(3));
    }

    #[test]
    fn radius_examples() {
        for n in 4..10 {
            assert_eq!(PolytopeGraph::wheel(n).unwrap().radius(), Ok(1));
        }
        assert_eq!(PolytopeGraph::cycle(6).unwrap().radius(), Ok(3));
        assert_eq!(PolytopeGraph::complete(2).unwrap().radius(), Ok(1));
        assert_eq!(
            PolytopeGraph::empty(2).unwrap().radius(),
            Err(Error::InfiniteRadius)
        );
    }

    #[test]
    fn components_are_ordered_by_least_vertex() {
        let tri = PolytopeGraph::cycle(3).unwrap();
        let g = tri.disjoint_union(&tri).unwrap().disjoint_union(&tri).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        assert_eq!(PolytopeGraph::wheel(7).unwrap().connected_components().len(), 1);
        assert_eq!(PolytopeGraph::empty(4).unwrap().connected_components().len(), 4);
    }

    #[test]
    fn json_form_round_trips() {
        let g = PolytopeGraph::wheel(5).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.starts_with(r#"{"n":5,"edges":[[0,1]"#));
        let back: PolytopeGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<PolytopeGraph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
