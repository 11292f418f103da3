//! Forbidden-configuration detectors, clique and homomorphism search, and
//! audits of the link structure of cancellative and `F5`-free 3-graphs.
//!
//! All searches iterate in a fixed order and return the first witness found,
//! so results are reproducible.

mod facts;
mod homomorphism;

pub use facts::{
    audit_link_facts, link_restriction_bound, FactReport, LinkAudit, LinkBound, ADJACENT_LINKS_DISJOINT, EDGE_LINKS_DISJOINT,
    EDGE_LINKS_TRIANGLE_SPLIT, LINK_TRIANGLE_FREE, PAIR_NEIGHBORHOOD_INDEPENDENT,
};
pub use homomorphism::{find_homomorphism, find_homomorphism_with_cap, DEFAULT_HOM_CAP};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, ThreeGraph, Witness};

pub const DEFAULT_CLIQUE_CAP: usize = 256;

/// First copy of `F5 = {abc, abd, cde}`, scanning pairs `ab` with
/// `|N(ab)| >= 2` and then `N(cd)` for each `c < d` in `N(ab)`.
pub fn find_f5(h: &ThreeGraph) -> Option<Witness> {
    let n = h.n();
    for b in 1..n {
        for a in 0..b {
            let nab = h.pair_bits(a, b);
            if nab.count_ones(..) < 2 {
                continue;
            }
            let common: Vec<usize> = nab.ones().collect();
            for (i, &c) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if let Some(e) = h
                        .pair_bits(c, d)
                        .ones()
                        .find(|&e| e != a && e != b)
                    {
                        return Some(Witness::f5(a, b, c, d, e));
                    }
                }
            }
        }
    }
    None
}

/// First copy of `K4^{3-} = {abc, abd, acd}`, i.e. a vertex `a` whose link
/// contains a triangle.
pub fn find_k4_minus(h: &ThreeGraph) -> Option<Witness> {
    let n = h.n();
    for a in 0..n {
        for b in 0..n {
            if b == a {
                continue;
            }
            let nab = h.pair_bits(a, b);
            for c in nab.ones().filter(|&c| c > b) {
                for d in nab.ones().filter(|&d| d > c) {
                    if h.pair_bits(c, d).contains(a) {
                        return Some(Witness::k4_minus(a, b, c, d));
                    }
                }
            }
        }
    }
    None
}

/// `true` iff no edges `A != B` and `C` satisfy `A △ B ⊆ C`.
///
/// Works directly from the edge list: only pairs of edges sharing two
/// vertices have a symmetric difference small enough to fit inside an edge.
pub fn is_cancellative(h: &ThreeGraph) -> bool {
    let edges = h.edges();
    let covered: std::collections::HashSet<(usize, usize)> = edges
        .iter()
        .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
        .collect();
    for (i, x) in edges.iter().enumerate() {
        for y in &edges[i + 1..] {
            let only_x: Vec<usize> = x.iter().copied().filter(|v| !y.contains(v)).collect();
            if only_x.len() != 1 {
                continue;
            }
            let only_y = y.iter().copied().find(|v| !x.contains(v)).unwrap();
            let p = only_x[0].min(only_y);
            let q = only_x[0].max(only_y);
            if covered.contains(&(p, q)) {
                return false;
            }
        }
    }
    true
}

/// First `K4` in the shadow, with one covering edge per clique pair.
pub fn find_k4_shadow(h: &ThreeGraph) -> Option<Witness> {
    let shadow = h.shadow();
    let clique = find_clique_with_cap(&shadow, 4, usize::MAX).ok()??;
    let v = clique.vertices;
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let w = h.pair_bits(v[i], v[j]).ones().next()?;
            let mut e = vec![v[i], v[j], w];
            e.sort_unstable();
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    Some(Witness {
        kind: crate::graph::WitnessKind::K4Shadow,
        vertices: v,
        edges,
        mapping: Vec::new(),
    })
}

/// First `k`-clique in index order.
pub fn find_clique(g: &Graph, k: usize) -> Result<Option<Witness>> {
    find_clique_with_cap(g, k, DEFAULT_CLIQUE_CAP)
}

pub fn find_clique_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Option<Witness>> {
    if g.n() > cap {
        return Err(Error::SizeLimit { n: g.n(), cap });
    }
    if k == 0 {
        return Err(Error::PreconditionViolated("clique size must be at least 1".into()));
    }
    let mut cand = FixedBitSet::with_capacity(g.n());
    cand.insert_range(..);
    let mut cur = Vec::with_capacity(k);
    Ok(extend_clique(g, &cand, k, &mut cur).then(|| Witness::clique(cur)))
}

fn extend_clique(g: &Graph, cand: &FixedBitSet, k: usize, cur: &mut Vec<usize>) -> bool {
    if cur.len() == k {
        return true;
    }
    let need = k - cur.len();
    if cand.count_ones(..) < need {
        return false;
    }
    let mut rest = cand.clone();
    for v in cand.ones() {
        if rest.count_ones(..) < need {
            return false;
        }
        rest.set(v, false);
        let mut next = rest.clone();
        next.intersect_with(g.neighbors(v));
        cur.push(v);
        if extend_clique(g, &next, k, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Triangles `a < b < c` of `g`, in lexicographic order.
pub(crate) fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &[a, b] in g.edges() {
        let mut common = g.neighbors(a).clone();
        common.intersect_with(g.neighbors(b));
        for c in common.ones().filter(|&c| c > b) {
            out.push([a, b, c]);
        }
    }
    out.sort_unstable();
    out
}
