//! Triples of `[n]` as bit positions of a `u64`, with precomputed
//! forbidden-pattern tables.

use super::Family;
use crate::graph::ThreeGraph;

/// Largest `n` whose triples fit in a `u64` mask.
pub const MASK_CAP: usize = 8;

#[derive(Clone, Debug)]
pub struct EdgeSpace {
    n: usize,
    triples: Vec<[usize; 3]>,
    index: Vec<usize>,
    /// Edges containing each vertex.
    vertex_edges: Vec<u64>,
    /// For each edge, masks of the other edges that complete a forbidden
    /// pattern together with it.
    conflicts: Vec<Vec<u64>>,
    /// Pair bits covered by each edge (pairs indexed `b(b-1)/2 + a`).
    edge_pairs: Vec<u64>,
    k4_shadow: bool,
}

fn pair_bit(a: usize, b: usize) -> u64 {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    1u64 << (b * (b - 1) / 2 + a)
}

impl EdgeSpace {
    /// Panics if `n > MASK_CAP`; callers check the cap first.
    pub fn new(n: usize, family: Family) -> Self {
        assert!(n <= MASK_CAP, "edge masks hold at most {MASK_CAP} vertices");
        let mut triples = Vec::new();
        let mut index = vec![usize::MAX; n * n * n];
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    index[(a * n + b) * n + c] = triples.len();
                    triples.push([a, b, c]);
                }
            }
        }
        let m = triples.len();
        let mut vertex_edges = vec![0u64; n];
        let mut edge_pairs = vec![0u64; m];
        for (i, &[a, b, c]) in triples.iter().enumerate() {
            for v in [a, b, c] {
                vertex_edges[v] |= 1 << i;
            }
            edge_pairs[i] = pair_bit(a, b) | pair_bit(a, c) | pair_bit(b, c);
        }
        let mut space = EdgeSpace {
            n,
            triples,
            index,
            vertex_edges,
            conflicts: vec![Vec::new(); m],
            edge_pairs,
            k4_shadow: family.k4_shadow,
        };
        let mut patterns: Vec<u64> = Vec::new();
        if family.k4_minus {
            // three of the four triples of a 4-set
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let q = [
                                space.bit(a, b, c),
                                space.bit(a, b, d),
                                space.bit(a, c, d),
                                space.bit(b, c, d),
                            ];
                            for skip in 0..4 {
                                patterns.push((0..4).filter(|&k| k != skip).fold(0, |acc, k| acc | q[k]));
                            }
                        }
                    }
                }
            }
        }
        if family.f5 {
            // {abc, abd, cde}: a pair ab, two completions c < d, and e off both
            for a in 0..n {
                for b in a + 1..n {
                    for c in 0..n {
                        for d in c + 1..n {
                            if [a, b].contains(&c) || [a, b].contains(&d) {
                                continue;
                            }
                            for e in 0..n {
                                if [a, b, c, d].contains(&e) {
                                    continue;
                                }
                                patterns.push(space.bit(a, b, c) | space.bit(a, b, d) | space.bit(c, d, e));
                            }
                        }
                    }
                }
            }
        }
        patterns.sort_unstable();
        patterns.dedup();
        for p in patterns {
            let mut rest = p;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                space.conflicts[i].push(p & !(1 << i));
            }
        }
        space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.triples.len()
    }

    pub fn full(&self) -> u64 {
        if self.triples.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.triples.len()) - 1
        }
    }

    pub fn triple(&self, i: usize) -> [usize; 3] {
        self.triples[i]
    }

    pub fn index(&self, a: usize, b: usize, c: usize) -> usize {
        let mut t = [a, b, c];
        t.sort_unstable();
        self.index[(t[0] * self.n + t[1]) * self.n + t[2]]
    }

    fn bit(&self, a: usize, b: usize, c: usize) -> u64 {
        1u64 << self.index(a, b, c)
    }

    pub fn vertex_edges(&self, v: usize) -> u64 {
        self.vertex_edges[v]
    }

    pub fn degree(&self, mask: u64, v: usize) -> u32 {
        (mask & self.vertex_edges[v]).count_ones()
    }

    pub fn min_degree(&self, mask: u64) -> u32 {
        (0..self.n).map(|v| self.degree(mask, v)).min().unwrap_or(0)
    }

    /// Whether adding edge `i` to the family-free `mask` keeps it family-free.
    pub fn compatible(&self, mask: u64, i: usize) -> bool {
        if self.conflicts[i].iter().any(|&c| c & !mask == 0) {
            return false;
        }
        !(self.k4_shadow && self.closes_k4_shadow(mask, i))
    }

    /// Whether the shadow of `mask + i` has a `K4` through a pair of edge `i`.
    fn closes_k4_shadow(&self, mask: u64, i: usize) -> bool {
        let mut adj = vec![0u16; self.n];
        let mut rest = mask | (1 << i);
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let [a, b, c] = self.triples[e];
            adj[a] |= (1 << b) | (1 << c);
            adj[b] |= (1 << a) | (1 << c);
            adj[c] |= (1 << a) | (1 << b);
        }
        let [a, b, c] = self.triples[i];
        [(a, b), (a, c), (b, c)].into_iter().any(|(u, v)| {
            let mut common = adj[u] & adj[v];
            while common != 0 {
                let w = common.trailing_zeros() as usize;
                common &= common - 1;
                if adj[w] & common != 0 {
                    return true;
                }
            }
            false
        })
    }

    /// Edges of `candidates` still compatible with `mask`.
    pub fn filter_compatible(&self, mask: u64, candidates: u64) -> u64 {
        let mut out = 0;
        let mut rest = candidates;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.compatible(mask, j) {
                out |= 1 << j;
            }
        }
        out
    }

    pub fn shadow_pairs(&self, mask: u64) -> u64 {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.edge_pairs[e];
        }
        out
    }

    /// Whether the shadow of `mask` is properly 3-colorable.
    pub fn shadow_three_colorable(&self, mask: u64) -> bool {
        let mut adj = [0u16; MASK_CAP];
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let [a, b, c] = self.triples[e];
            adj[a] |= (1 << b) | (1 << c);
            adj[b] |= (1 << a) | (1 << c);
            adj[c] |= (1 << a) | (1 << b);
        }
        // classes[k] = vertices coloured k so far
        fn extend(adj: &[u16], v: usize, n: usize, classes: &mut [u16; 3], used: usize) -> bool {
            if v == n {
                return true;
            }
            for k in 0..(used + 1).min(3) {
                if adj[v] & classes[k] == 0 {
                    classes[k] |= 1 << v;
                    if extend(adj, v + 1, n, classes, used.max(k + 1)) {
                        return true;
                    }
                    classes[k] &= !(1 << v);
                }
            }
            false
        }
        extend(&adj, 0, self.n, &mut [0; 3], 0)
    }

    pub fn to_graph(&self, mask: u64) -> ThreeGraph {
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            edges.push(self.triples[e]);
        }
        ThreeGraph::new(self.n, edges).expect("valid triples")
    }

    pub fn to_mask(&self, h: &ThreeGraph) -> u64 {
        h.edges().iter().fold(0, |acc, &[a, b, c]| acc | self.bit(a, b, c))
    }

    /// Edge permutation induced by a vertex permutation.
    pub fn edge_permutation(&self, perm: &[usize]) -> Vec<u8> {
        self.triples
            .iter()
            .map(|&[a, b, c]| self.index(perm[a], perm[b], perm[c]) as u8)
            .collect()
    }
}

pub fn apply_edge_permutation(mask: u64, table: &[u8]) -> u64 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << table[e];
    }
    out
}
