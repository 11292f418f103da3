//! Definition-level oracles and corpus generators shared by the integration
//! tests. Nothing here calls the library detectors.
#![allow(dead_code)]

use f5_core::ThreeGraph;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Triple = [usize; 3];

pub fn all_triples(n: usize) -> Vec<Triple> {
    (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .collect()
}

/// Degree of every vertex, counted straight from the edge list.
pub fn degrees(h: &ThreeGraph) -> Vec<usize> {
    let mut d = vec![0; h.n()];
    for e in h.edges() {
        for &v in e {
            d[v] += 1;
        }
    }
    d
}

pub fn min_degree(h: &ThreeGraph) -> usize {
    degrees(h).into_iter().min().unwrap_or(0)
}

/// Distinct edges `A, B` sharing two vertices, as (shared pair, `A \ B`,
/// `B \ A`).
fn overlapping_pairs(edges: &[Triple]) -> Vec<([usize; 2], usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            let shared: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
            if shared.len() == 2 {
                let x = *a.iter().find(|v| !b.contains(v)).unwrap();
                let y = *b.iter().find(|v| !a.contains(v)).unwrap();
                out.push(([shared[0], shared[1]], x, y));
            }
        }
    }
    out
}

/// No distinct edges `A, B, C` with `A △ B ⊆ C`. Only pairs sharing two
/// vertices have a symmetric difference small enough to fit in an edge.
pub fn cancellative_by_definition(edges: &[Triple]) -> bool {
    overlapping_pairs(edges)
        .into_iter()
        .all(|(_, x, y)| !edges.iter().any(|c| c.contains(&x) && c.contains(&y)))
}

/// No edges `abc, abd, cde`.
pub fn f5_free_by_definition(edges: &[Triple]) -> bool {
    overlapping_pairs(edges).into_iter().all(|([a, b], c, d)| {
        edges
            .iter()
            .filter(|e| e.contains(&c) && e.contains(&d))
            .all(|e| e.iter().all(|&v| v == c || v == d || v == a || v == b))
    })
}

/// No four vertices spanning three or more edges.
pub fn k4_minus_free_by_definition(h: &ThreeGraph) -> bool {
    let n = h.n();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (b + 1..n).all(|c| {
                (c + 1..n).all(|d| {
                    let q = [a, b, c, d];
                    (0..4).filter(|&skip| {
                        let t: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| q[i]).collect();
                        h.contains(t[0], t[1], t[2])
                    })
                    .count()
                        < 3
                })
            })
        })
    })
}

/// Largest vertex set meeting every edge in at most one vertex.
pub fn alpha_by_definition(h: &ThreeGraph) -> usize {
    let n = h.n();
    assert!(n <= 16);
    let masks: Vec<u32> = h.edges().iter().map(|e| e.iter().map(|&v| 1u32 << v).sum()).collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| (s & m).count_ones() <= 1))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether some map `V -> {0,1,2}` puts the vertices of every edge in three
/// distinct classes, by trying all `3^n` maps.
pub fn three_partite_by_definition(h: &ThreeGraph) -> bool {
    let n = h.n();
    assert!(n <= 10);
    let total = 3usize.pow(n as u32);
    (0..total).any(|mut code| {
        let mut class = vec![0; n];
        for c in class.iter_mut() {
            *c = code % 3;
            code /= 3;
        }
        h.edges()
            .iter()
            .all(|&[a, b, c]| class[a] != class[b] && class[b] != class[c] && class[a] != class[c])
    })
}

/// Random greedy growth: triples are offered in random order, a random
/// number of them is tried, and each is kept while `admissible` holds.
pub fn grow(n: usize, rng: &mut impl Rng, admissible: fn(&[Triple]) -> bool) -> ThreeGraph {
    let mut triples = all_triples(n);
    triples.shuffle(rng);
    let tries = rng.gen_range(1..=triples.len());
    let mut edges: Vec<Triple> = Vec::new();
    for t in triples.into_iter().take(tries) {
        edges.push(t);
        if !admissible(&edges) {
            edges.pop();
        }
    }
    ThreeGraph::new(n, edges).unwrap()
}

/// Each triple independently with probability `p`.
pub fn bernoulli(n: usize, p: f64, rng: &mut impl Rng) -> ThreeGraph {
    let edges: Vec<Triple> = all_triples(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    ThreeGraph::new(n, edges).unwrap()
}
