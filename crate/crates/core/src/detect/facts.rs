//! Audits of the local structure forced by forbidding `K4^{3-}` and `F5`.
//!
//! Every violation is reported as an `F5` or `K4^{3-}` witness, which is the
//! configuration the violated clause rules out; each one re-validates against
//! the host 3-graph.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{independence_number, Graph, ThreeGraph, VertexSet, Witness};

use super::triangles;

pub const LINK_TRIANGLE_FREE: &str = "link-triangle-free";
pub const PAIR_NEIGHBORHOOD_INDEPENDENT: &str = "pair-neighborhood-independent";
pub const ADJACENT_LINKS_DISJOINT: &str = "adjacent-links-disjoint";
pub const EDGE_LINKS_DISJOINT: &str = "edge-links-disjoint";
pub const EDGE_LINKS_TRIANGLE_SPLIT: &str = "edge-links-triangle-split";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactReport {
    pub fact: String,
    pub holds: bool,
    pub violations: Vec<Witness>,
}

impl FactReport {
    fn new(fact: &str, mut violations: Vec<Witness>) -> Self {
        let mut seen = std::collections::HashSet::new();
        violations.retain(|w| seen.insert((w.kind, w.edges.clone())));
        FactReport {
            fact: fact.to_string(),
            holds: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkAudit {
    pub holds: bool,
    pub facts: Vec<FactReport>,
}

impl LinkAudit {
    pub fn fact(&self, id: &str) -> Option<&FactReport> {
        self.facts.iter().find(|f| f.fact == id)
    }
}

/// Checks, over all vertices, shadow pairs and edges:
///
/// * every link `L(v)` is triangle-free;
/// * `N(uv)` is independent for every shadow pair `uv`;
/// * `L(u) ∩ L(v) = ∅` for every shadow pair `uv`;
/// * for every edge `v1v2v3` and `W = V \ {v1,v2,v3}`, the restricted links
///   `L(vi, W)` are pairwise edge-disjoint;
/// * every triangle in `∪ L(vi, W)` lies in a single `L(vi, W)` or meets
///   each of them exactly once.
///
/// The first three hold in every cancellative 3-graph, the last two in
/// every `F5`-free one.
pub fn audit_link_facts(h: &ThreeGraph) -> LinkAudit {
    let facts = vec![
        FactReport::new(LINK_TRIANGLE_FREE, link_triangles(h)),
        FactReport::new(PAIR_NEIGHBORHOOD_INDEPENDENT, dependent_pair_neighborhoods(h)),
        FactReport::new(ADJACENT_LINKS_DISJOINT, shared_link_pairs(h)),
        FactReport::new(EDGE_LINKS_DISJOINT, edge_link_overlaps(h)),
        FactReport::new(EDGE_LINKS_TRIANGLE_SPLIT, edge_link_triangle_splits(h)),
    ];
    LinkAudit {
        holds: facts.iter().all(|f| f.holds),
        facts,
    }
}

fn link_triangles(h: &ThreeGraph) -> Vec<Witness> {
    let mut out = Vec::new();
    for v in 0..h.n() {
        let link = h.link(v, None).expect("vertex in range");
        for [a, b, c] in triangles(&link) {
            out.push(Witness::k4_minus(v, a, b, c));
        }
    }
    out
}

/// Witness for three edges `uvw1, uvw2` and `w1w2z`.
fn pair_pattern(u: usize, v: usize, w1: usize, w2: usize, z: usize) -> Witness {
    if z == u {
        Witness::k4_minus(u, v, w1, w2)
    } else if z == v {
        Witness::k4_minus(v, u, w1, w2)
    } else {
        Witness::f5(u, v, w1, w2, z)
    }
}

fn dependent_pair_neighborhoods(h: &ThreeGraph) -> Vec<Witness> {
    let mut out = Vec::new();
    for v in 1..h.n() {
        for u in 0..v {
            let common: Vec<usize> = h.pair_bits(u, v).ones().collect();
            for (i, &w1) in common.iter().enumerate() {
                for &w2 in &common[i + 1..] {
                    for z in h.pair_bits(w1, w2).ones() {
                        out.push(pair_pattern(u, v, w1, w2, z));
                    }
                }
            }
        }
    }
    out
}

fn shared_link_pairs(h: &ThreeGraph) -> Vec<Witness> {
    let mut out = Vec::new();
    for b in 1..h.n() {
        for a in 0..b {
            let common: Vec<usize> = h.pair_bits(a, b).ones().collect();
            for (i, &u) in common.iter().enumerate() {
                for &v in &common[i + 1..] {
                    // {a, b} lies in L(u) ∩ L(v); it matters when uv is a shadow pair
                    if let Some(z) = h.pair_bits(u, v).ones().next() {
                        out.push(pair_pattern(a, b, u, v, z));
                    }
                }
            }
        }
    }
    out
}

fn edge_link_overlaps(h: &ThreeGraph) -> Vec<Witness> {
    let mut out = Vec::new();
    for &edge in h.edges() {
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let (vi, vj, vk) = (edge[i], edge[j], edge[k]);
            let li = h.link(vi, None).expect("in range");
            for &[a, b] in li.edges() {
                if edge.contains(&a) || edge.contains(&b) {
                    continue;
                }
                if h.contains(vj, a, b) {
                    out.push(Witness::f5(a, b, vi, vj, vk));
                }
            }
        }
    }
    out
}

fn edge_link_triangle_splits(h: &ThreeGraph) -> Vec<Witness> {
    let mut out = Vec::new();
    for &edge in h.edges() {
        let mut w = VertexSet::full(h.n());
        for &x in &edge {
            w.remove(x);
        }
        let links: Vec<Graph> = edge
            .iter()
            .map(|&v| h.link(v, Some(&w)).expect("in range"))
            .collect();
        let union = Graph::new(
            h.n(),
            links.iter().flat_map(|l| l.edges().iter().copied()),
        )
        .expect("pairs in range");
        for [a, b, c] in triangles(&union) {
            let sides = [[a, b], [b, c], [a, c]];
            let member = |i: usize, s: [usize; 2]| links[i].has_edge(s[0], s[1]);
            let counts: Vec<usize> = (0..3)
                .map(|i| sides.iter().filter(|&&s| member(i, s)).count())
                .collect();
            if counts.contains(&3) || counts.iter().all(|&c| c == 1) {
                continue;
            }
            // some link holds exactly two sides; the third side sits in another link
            let Some(i) = counts.iter().position(|&c| c == 2) else {
                continue;
            };
            let odd = *sides.iter().find(|&&s| !member(i, s)).unwrap();
            let Some(j) = (0..3).find(|&j| j != i && member(j, odd)) else {
                continue;
            };
            let apex = [a, b, c]
                .into_iter()
                .find(|x| !odd.contains(x))
                .unwrap();
            out.push(Witness::f5(edge[i], apex, odd[0], odd[1], edge[j]));
        }
    }
    out
}

/// `|L(v, S)|` next to the lower bound `|L(v)| - α(H)·|V \ S|`, which holds
/// whenever `H` is cancellative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkBound {
    pub restricted: i64,
    pub bound: i64,
}

impl LinkBound {
    pub fn holds(&self) -> bool {
        self.restricted >= self.bound
    }
}

pub fn link_restriction_bound(h: &ThreeGraph, v: usize, s: &VertexSet) -> Result<LinkBound> {
    let restricted = h.link(v, Some(s))?.edge_count() as i64;
    let alpha = independence_number(h)? as i64;
    let outside = (0..h.n()).filter(|&x| !s.contains(x)).count() as i64;
    Ok(LinkBound {
        restricted,
        bound: h.degree(v) as i64 - alpha * outside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(x: usize, y: [usize; 5]) -> ThreeGraph {
        let w = ThreeGraph::new(6, (0..5).map(|i| [0, 1 + i, 1 + (i + 1) % 5])).unwrap();
        let mut sizes = vec![x];
        sizes.extend(y);
        w.blowup(&sizes).unwrap()
    }

    fn all_valid(audit: &LinkAudit, h: &ThreeGraph) -> bool {
        audit
            .facts
            .iter()
            .all(|f| f.violations.iter().all(|w| w.validate_three(h)))
    }

    #[test]
    fn wheel_blowup_satisfies_every_fact() {
        let h = wheel(3, [1; 5]);
        let audit = audit_link_facts(&h);
        assert!(audit.holds, "{audit:?}");
        assert_eq!(audit.facts.len(), 5);
    }

    #[test]
    fn k4_minus_violates_link_clauses() {
        let h = ThreeGraph::k4_minus();
        let audit = audit_link_facts(&h);
        assert!(!audit.holds);
        assert!(!audit.fact(LINK_TRIANGLE_FREE).unwrap().holds);
        assert!(!audit.fact(ADJACENT_LINKS_DISJOINT).unwrap().holds);
        assert!(!audit.fact(PAIR_NEIGHBORHOOD_INDEPENDENT).unwrap().holds);
        assert!(all_valid(&audit, &h));
    }

    #[test]
    fn f5_violates_edge_clause() {
        let h = ThreeGraph::f5();
        let audit = audit_link_facts(&h);
        assert!(!audit.fact(EDGE_LINKS_DISJOINT).unwrap().holds);
        assert!(all_valid(&audit, &h));
    }

    #[test]
    fn single_edge_is_vacuous() {
        assert!(audit_link_facts(&ThreeGraph::new(3, [[0, 1, 2]]).unwrap()).holds);
    }

    #[test]
    fn restriction_bound_examples() {
        let t = ThreeGraph::new(3, [[0, 1, 2]]).unwrap().blowup(&[2, 2, 2]).unwrap();
        // parts {0,1}, {2,3}, {4,5}
        let full = VertexSet::full(6);
        let b = link_restriction_bound(&t, 0, &full).unwrap();
        assert_eq!(b, LinkBound { restricted: 4, bound: 4 });
        let s = VertexSet::from_vertices(6, &[0, 1, 2, 3, 4]).unwrap();
        let b = link_restriction_bound(&t, 0, &s).unwrap();
        assert_eq!(b, LinkBound { restricted: 2, bound: 2 });
        let none = VertexSet::empty(6);
        let b = link_restriction_bound(&t, 0, &none).unwrap();
        assert_eq!(b.restricted, 0);
        assert!(b.holds());
    }
}
