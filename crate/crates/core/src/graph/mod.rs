//! Immutable graph and 3-graph values.
//!
//! Vertices are the dense integers `0..n`. A [`ThreeGraph`] keeps, next to
//! its sorted edge list, a triangular table of pair neighbourhoods so that
//! `N(uv)` is a single bitset lookup and edge membership is one bit test.

mod structure;
mod witness;

pub use structure::{
    independence_number, independence_number_with_cap, max_independent_set, three_partition,
    three_partition_with_cap, three_coloring, DEFAULT_COLORING_CAP, DEFAULT_INDEPENDENCE_CAP,
};
pub use witness::{Witness, WitnessKind};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &v in vertices {
            if v >= n {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            s.bits.insert(v);
        }
        Ok(s)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        VertexSet { bits }
    }

    /// Size of the ground set `0..n`.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<[usize; 2]>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph, normalising each pair to `a < b` and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 2]>) -> Result<Self> {
        let mut list = Vec::new();
        for [a, b] in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::OutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::DegenerateEdge { edge: vec![a, b] });
            }
            list.push([a.min(b), a.max(b)]);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`Graph::new`] but rejects repeated pairs.
    pub fn new_strict(n: usize, edges: impl IntoIterator<Item = [usize; 2]>) -> Result<Self> {
        let raw: Vec<[usize; 2]> = edges.into_iter().collect();
        let g = Self::new(n, raw.iter().copied())?;
        if g.edges.len() != raw.len() {
            let mut seen = std::collections::HashSet::new();
            for [a, b] in raw {
                if !seen.insert([a.min(b), a.max(b)]) {
                    return Err(Error::DuplicateEdge { edge: vec![a, b] });
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<[usize; 2]>) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &[a, b] in &edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| [a, b]))
            .collect();
        Self::from_sorted(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::DimensionTooSmall { m: n, min: 3 });
        }
        Self::new(n, (0..n).map(|i| [i, (i + 1) % n]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v].clone())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut it = (0..self.n).map(|v| self.degree(v));
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|a| (a + 1..self.n).map(move |b| [a, b]))
            .filter(|&[a, b]| !self.adj[a].contains(b))
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// `G[S]`, relabelled onto `0..|S|` in increasing order.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let verts = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|[a, b]| s.contains(*a) && s.contains(*b))
            .map(|&[a, b]| [index[a], index[b]])
            .collect();
        Graph::from_sorted(verts.len(), edges)
    }

    /// Blowup replacing vertex `v` with an independent class of `sizes[v]` vertices.
    pub fn blowup(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.n {
            return Err(Error::BadPartition {
                expected: self.n,
                got: sizes.len(),
            });
        }
        let offsets = class_offsets(sizes);
        let mut edges = Vec::new();
        for &[a, b] in &self.edges {
            for x in offsets[a]..offsets[a] + sizes[a] {
                for y in offsets[b]..offsets[b] + sizes[b] {
                    edges.push([x.min(y), x.max(y)]);
                }
            }
        }
        edges.sort_unstable();
        Ok(Graph::from_sorted(offsets[self.n], edges))
    }
}

pub(crate) fn class_offsets(sizes: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(sizes.len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for &s in sizes {
        acc += s;
        offsets.push(acc);
    }
    offsets
}

#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// A 3-uniform hypergraph on `0..n` with sorted, duplicate-free edges.
#[derive(Clone, Debug)]
pub struct ThreeGraph {
    n: usize,
    edges: Vec<[usize; 3]>,
    pair_nbrs: Vec<FixedBitSet>,
    degrees: Vec<usize>,
}

impl PartialEq for ThreeGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for ThreeGraph {}

/// Minimum, maximum and per-vertex degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

impl ThreeGraph {
    /// Builds a 3-graph, sorting every triple and the edge list and
    /// dropping repeated triples.
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let mut list = Vec::new();
        for e in edges {
            list.push(normalize_triple(n, e)?);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`ThreeGraph::new`] but rejects repeated triples.
    pub fn new_strict(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let mut list = Vec::new();
        for e in edges {
            list.push(normalize_triple(n, e)?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: w[0].to_vec() });
        }
        Ok(Self::from_sorted(n, list))
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<[usize; 3]>) -> Self {
        let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
        let mut pair_nbrs = vec![FixedBitSet::with_capacity(n); pairs];
        let mut degrees = vec![0; n];
        for &[a, b, c] in &edges {
            pair_nbrs[pair_index(a, b)].insert(c);
            pair_nbrs[pair_index(a, c)].insert(b);
            pair_nbrs[pair_index(b, c)].insert(a);
            degrees[a] += 1;
            degrees[b] += 1;
            degrees[c] += 1;
        }
        ThreeGraph {
            n,
            edges,
            pair_nbrs,
            degrees,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// The generalized triangle `{012, 013, 234}`.
    pub fn f5() -> Self {
        Self::from_sorted(5, vec![[0, 1, 2], [0, 1, 3], [2, 3, 4]])
    }

    /// `K4^{3-}` as `{012, 013, 023}`.
    pub fn k4_minus() -> Self {
        Self::from_sorted(4, vec![[0, 1, 2], [0, 1, 3], [0, 2, 3]])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        a < self.n
            && b < self.n
            && c < self.n
            && a != b
            && self.pair_nbrs[pair_index(a, b)].contains(c)
    }

    /// Raw `N(uv)` bitset; `u != v` and both in range.
    pub(crate) fn pair_bits(&self, u: usize, v: usize) -> &FixedBitSet {
        &self.pair_nbrs[pair_index(u, v)]
    }

    /// `N(uv) = { w : uvw ∈ H }`.
    pub fn pair_neighborhood(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(VertexSet::from_bits(self.pair_bits(u, v).clone()))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile {
            min: self.degrees.iter().copied().min().unwrap_or(0),
            max: self.degrees.iter().copied().max().unwrap_or(0),
            degrees: self.degrees.clone(),
        }
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// The graph of pairs covered by some edge.
    pub fn shadow(&self) -> Graph {
        let mut pairs: Vec<[usize; 2]> = Vec::new();
        for b in 1..self.n {
            for a in 0..b {
                if !self.pair_nbrs[pair_index(a, b)].is_clear() {
                    pairs.push([a, b]);
                }
            }
        }
        pairs.sort_unstable();
        Graph::from_sorted(self.n, pairs)
    }

    /// `L(v)`, or `L(v) ∩ (W choose 2)` when `within` is given.
    pub fn link(&self, v: usize, within: Option<&VertexSet>) -> Result<Graph> {
        self.check_vertex(v)?;
        if let Some(w) = within {
            if w.universe() > self.n {
                if let Some(bad) = w.iter().find(|&x| x >= self.n) {
                    return Err(Error::OutOfRange {
                        vertex: bad,
                        n: self.n,
                    });
                }
            }
        }
        let keep = |x: usize| within.is_none_or(|w| w.contains(x));
        let mut pairs = Vec::new();
        for e in &self.edges {
            if let Some(pos) = e.iter().position(|&x| x == v) {
                let (a, b) = match pos {
                    0 => (e[1], e[2]),
                    1 => (e[0], e[2]),
                    _ => (e[0], e[1]),
                };
                if keep(a) && keep(b) {
                    pairs.push([a, b]);
                }
            }
        }
        pairs.sort_unstable();
        Ok(Graph::from_sorted(self.n, pairs))
    }

    /// Blowup `H[sizes]`: vertex `v` becomes a class of `sizes[v]` vertices and
    /// every edge becomes the complete 3-partite 3-graph on its classes.
    pub fn blowup(&self, sizes: &[usize]) -> Result<ThreeGraph> {
        if sizes.len() != self.n {
            return Err(Error::BadPartition {
                expected: self.n,
                got: sizes.len(),
            });
        }
        let offsets = class_offsets(sizes);
        let mut edges = Vec::new();
        for &[a, b, c] in &self.edges {
            for x in offsets[a]..offsets[a + 1] {
                for y in offsets[b]..offsets[b + 1] {
                    for z in offsets[c]..offsets[c + 1] {
                        let mut t = [x, y, z];
                        t.sort_unstable();
                        edges.push(t);
                    }
                }
            }
        }
        edges.sort_unstable();
        Ok(ThreeGraph::from_sorted(offsets[self.n], edges))
    }

    /// Applies a vertex permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<ThreeGraph> {
        if perm.len() != self.n {
            return Err(Error::PreconditionViolated(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        ThreeGraph::new(
            self.n,
            self.edges.iter().map(|&[a, b, c]| [perm[a], perm[b], perm[c]]),
        )
    }

    /// Sub-3-graph with the given edges removed from consideration.
    pub fn filter_edges(&self, keep: impl Fn(&[usize; 3]) -> bool) -> ThreeGraph {
        ThreeGraph::from_sorted(
            self.n,
            self.edges.iter().copied().filter(|e| keep(e)).collect(),
        )
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::OutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

fn normalize_triple(n: usize, e: [usize; 3]) -> Result<[usize; 3]> {
    for &v in &e {
        if v >= n {
            return Err(Error::OutOfRange { vertex: v, n });
        }
    }
    let mut t = e;
    t.sort_unstable();
    if t[0] == t[1] || t[1] == t[2] {
        return Err(Error::DegenerateEdge { edge: e.to_vec() });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel() -> ThreeGraph {
        // hub 0, rim 1..=5
        ThreeGraph::new(6, (0..5).map(|i| [0, 1 + i, 1 + (i + 1) % 5])).unwrap()
    }

    #[test]
    fn builds_f5() {
        let h = ThreeGraph::new(5, [[0, 1, 2], [0, 1, 3], [2, 3, 4]]).unwrap();
        assert_eq!(h, ThreeGraph::f5());
        assert_eq!(h.n(), 5);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn normalizes_and_dedups() {
        let h = ThreeGraph::new(4, [[2, 1, 0], [0, 1, 2], [3, 0, 1]]).unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2], [0, 1, 3]]);
    }

    #[test]
    fn empty_has_zero_min_degree() {
        let h = ThreeGraph::new(4, []).unwrap();
        assert_eq!(h.degree_profile().min, 0);
        assert_eq!(h.degree_profile().max, 0);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(
            ThreeGraph::new(3, [[0, 1, 1]]),
            Err(Error::DegenerateEdge { edge: vec![0, 1, 1] })
        );
        assert_eq!(
            ThreeGraph::new(3, [[0, 1, 3]]),
            Err(Error::OutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            ThreeGraph::new_strict(4, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn shadow_of_single_edge_and_wheel() {
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.shadow().edges(), &[[0, 1], [0, 2], [1, 2]]);
        let w = wheel();
        let s = w.shadow();
        assert_eq!(s.edge_count(), 10);
        for i in 1..=5 {
            assert!(s.has_edge(0, i));
            assert!(s.has_edge(i, 1 + i % 5));
        }
        assert_eq!(ThreeGraph::empty(5).shadow().edge_count(), 0);
    }

    #[test]
    fn links() {
        let f5 = ThreeGraph::f5();
        assert_eq!(f5.link(4, None).unwrap().edges(), &[[2, 3]]);
        let none = VertexSet::empty(5);
        assert_eq!(f5.link(0, Some(&none)).unwrap().edge_count(), 0);
        assert!(f5.link(5, None).is_err());
    }

    #[test]
    fn pair_neighborhoods() {
        let f5 = ThreeGraph::f5();
        assert_eq!(f5.pair_neighborhood(0, 1).unwrap().to_vec(), vec![2, 3]);
        assert!(f5.pair_neighborhood(0, 4).unwrap().is_empty());
        assert_eq!(f5.pair_neighborhood(2, 2), Err(Error::SameVertex(2)));
        assert!(f5.pair_neighborhood(0, 7).is_err());
    }

    #[test]
    fn wheel_degrees() {
        let p = wheel().degree_profile();
        assert_eq!((p.min, p.max), (2, 5));
    }

    #[test]
    fn graph_basics() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.regular_degree(), Some(2));
        assert_eq!(c5.complement().regular_degree(), Some(2));
        assert!(Graph::new(3, [[1, 1]]).is_err());
        let b = c5.blowup(&[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(b.n(), 10);
        assert_eq!(b.edge_count(), 20);
    }
}
