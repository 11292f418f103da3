//! Isomorph-free orderly generation and labeled enumeration.
//!
//! The canonical form of an edge mask is its largest image, as an integer,
//! under the vertex permutations. Deleting the lowest edge of a canonical
//! mask leaves a canonical mask, so every canonical mask is produced exactly
//! once by adding, to a canonical parent, one edge below its lowest edge and
//! keeping the result when it is canonical. Forbidden families are closed
//! under taking subgraphs, so family-free generation prunes at the parent.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::space::{apply_edge_permutation, EdgeSpace};
use super::{Family, Mode, SearchResult, SearchSpec, SEARCH_CAP};
use crate::error::{Error, Result};
use crate::graph::ThreeGraph;
use crate::par::{map_slice, Execution};

/// Largest order for canonical (isomorph-free) generation.
pub const CANONICAL_CAP: usize = 7;
/// Largest order for labeled enumeration.
pub const LABELED_CAP: usize = 6;

const FRONTIER_DEPTH: u32 = 3;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

struct Canonizer {
    space: EdgeSpace,
    /// Edge permutations of every non-identity vertex permutation.
    tables: Vec<Vec<u8>>,
}

impl Canonizer {
    fn new(n: usize, family: Family) -> Self {
        let space = EdgeSpace::new(n, family);
        let tables = permutations(n)
            .iter()
            .skip(1)
            .map(|p| space.edge_permutation(p))
            .collect();
        Canonizer { space, tables }
    }

    fn is_canonical(&self, mask: u64) -> bool {
        self.tables.iter().all(|t| apply_edge_permutation(mask, t) <= mask)
    }

    fn canonical(&self, mask: u64) -> u64 {
        self.tables
            .iter()
            .map(|t| apply_edge_permutation(mask, t))
            .fold(mask, u64::max)
    }

    /// Canonical, family-free children in increasing edge order.
    fn children(&self, mask: u64) -> impl Iterator<Item = u64> + '_ {
        let below = if mask == 0 {
            self.space.edge_count()
        } else {
            mask.trailing_zeros() as usize
        };
        (0..below)
            .rev()
            .filter(move |&e| self.space.compatible(mask, e))
            .map(move |e| mask | 1 << e)
            .filter(move |&c| self.is_canonical(c))
    }

    /// Canonical nodes of depth `FRONTIER_DEPTH` in generation order, after
    /// visiting the shallower ones.
    fn frontier(&self, visit: &mut impl FnMut(u64) -> bool) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![0u64];
        // depth-first with explicit order: children pushed in reverse
        while let Some(m) = stack.pop() {
            if m.count_ones() == FRONTIER_DEPTH {
                out.push(m);
                continue;
            }
            if !visit(m) {
                continue;
            }
            let kids: Vec<u64> = self.children(m).collect();
            stack.extend(kids.into_iter().rev());
        }
        out
    }

    fn walk(&self, mask: u64, visit: &mut impl FnMut(u64) -> bool) {
        if !visit(mask) {
            return;
        }
        for c in self.children(mask) {
            self.walk(c, visit);
        }
    }
}

/// Canonical form of `h` under vertex permutations (largest permuted edge
/// mask). Bit `i` is the `i`-th triple in lexicographic order.
pub fn canonical_mask(h: &ThreeGraph) -> Result<u64> {
    if h.n() > CANONICAL_CAP {
        return Err(Error::SizeLimit { n: h.n(), cap: CANONICAL_CAP });
    }
    let c = Canonizer::new(h.n(), Family::none());
    Ok(c.canonical(c.space.to_mask(h)))
}

/// Number of isomorphism classes of 3-graphs on `n` vertices by Burnside's
/// lemma: the average of `2^(edge cycles)` over all vertex permutations.
pub fn burnside_class_count(n: usize) -> Result<u64> {
    if n > CANONICAL_CAP {
        return Err(Error::SizeLimit { n, cap: CANONICAL_CAP });
    }
    let perms = permutations(n);
    let triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
        .collect();
    let mut total = 0u64;
    for p in &perms {
        let image = |t: [usize; 3]| {
            let mut s = [p[t[0]], p[t[1]], p[t[2]]];
            s.sort_unstable();
            s
        };
        let mut seen = vec![false; triples.len()];
        let mut cycles = 0;
        for start in 0..triples.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut t = triples[start];
            loop {
                let i = triples.iter().position(|&x| x == t).expect("triple");
                if seen[i] {
                    break;
                }
                seen[i] = true;
                t = image(t);
            }
        }
        total += 1u64 << cycles;
    }
    Ok(total / perms.len() as u64)
}

/// Every 3-graph on `n` vertices satisfying `predicate`, once per
/// isomorphism class when `canonical`, otherwise once per labeling.
pub fn enumerate(
    n: usize,
    canonical: bool,
    predicate: impl Fn(&ThreeGraph) -> bool + Sync,
) -> Result<Vec<ThreeGraph>> {
    enumerate_family_free(n, Family::none(), canonical, predicate)
}

/// As [`enumerate`], restricted to `family`-free 3-graphs (pruned during
/// generation).
pub fn enumerate_family_free(
    n: usize,
    family: Family,
    canonical: bool,
    predicate: impl Fn(&ThreeGraph) -> bool + Sync,
) -> Result<Vec<ThreeGraph>> {
    let mut out = Vec::new();
    if canonical {
        if n > CANONICAL_CAP {
            return Err(Error::SizeLimit { n, cap: CANONICAL_CAP });
        }
        let c = Canonizer::new(n, family);
        let mut keep = |m: u64| {
            let h = c.space.to_graph(m);
            if predicate(&h) {
                out.push(h);
            }
            true
        };
        for root in c.frontier(&mut keep) {
            c.walk(root, &mut keep);
        }
    } else {
        if n > LABELED_CAP {
            return Err(Error::SizeLimit { n, cap: LABELED_CAP });
        }
        let space = EdgeSpace::new(n, family);
        // each subset is built by adding edges in increasing index order
        fn rec(space: &EdgeSpace, mask: u64, from: usize, visit: &mut impl FnMut(u64)) {
            visit(mask);
            for e in from..space.edge_count() {
                if space.compatible(mask, e) {
                    rec(space, mask | 1 << e, e + 1, visit);
                }
            }
        }
        rec(&space, 0, 0, &mut |m| {
            let h = space.to_graph(m);
            if predicate(&h) {
                out.push(h);
            }
        });
    }
    Ok(out)
}

/// Optimises over isomorphism classes instead of labeled graphs.
pub(super) fn reduced_search(spec: &SearchSpec) -> Result<SearchResult> {
    let n = spec.n.min(SEARCH_CAP);
    let c = Canonizer::new(n, spec.family);
    let nodes = AtomicU64::new(0);
    let stopped = AtomicBool::new(false);
    let value = |m: u64| match spec.mode {
        Mode::MaxEdges => m.count_ones() as usize,
        Mode::MaxMinDegree => c.space.min_degree(m) as usize,
    };
    let admissible = |m: u64| !spec.require_non_3partite || !c.space.shadow_three_colorable(m);
    let consider = |best: &mut Option<(usize, u64)>, m: u64| -> bool {
        let total = nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if spec.budget.is_some_and(|b| total > b) {
            stopped.store(true, Ordering::Relaxed);
        }
        if stopped.load(Ordering::Relaxed) {
            return false;
        }
        if admissible(m) {
            let v = value(m);
            if best.is_none_or(|(b, _)| v > b) {
                *best = Some((v, m));
            }
        }
        true
    };

    let mut best = None;
    let roots = c.frontier(&mut |m| consider(&mut best, m));
    let exec = if spec.budget.is_some() { Execution::Sequential } else { spec.execution };
    let results = map_slice(exec, &roots, |&root| {
        let mut local = None;
        c.walk(root, &mut |m| consider(&mut local, m));
        local
    });
    for r in results.into_iter().flatten() {
        if best.is_none_or(|(v, _)| r.0 > v) {
            best = Some(r);
        }
    }
    Ok(SearchResult {
        optimum: best.map(|(v, _)| v),
        witness: best.map(|(_, m)| c.space.to_graph(m)),
        nodes: nodes.load(Ordering::Relaxed),
        exhaustive: !stopped.load(Ordering::Relaxed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_f5;
    use std::collections::BTreeSet;

    #[test]
    fn class_counts_match_burnside() {
        // 1, 1, 1, 2, 5, 34, 2136 classes on 0..=6 vertices
        let known = [1, 1, 1, 2, 5, 34, 2136];
        for (n, &k) in known.iter().enumerate() {
            assert_eq!(burnside_class_count(n).unwrap(), k);
            assert_eq!(enumerate(n, true, |_| true).unwrap().len() as u64, k, "n = {n}");
        }
    }

    #[test]
    fn labeled_enumeration_is_complete() {
        assert_eq!(enumerate(4, false, |_| true).unwrap().len(), 16);
        assert_eq!(enumerate(5, false, |_| true).unwrap().len(), 1024);
    }

    #[test]
    fn canonical_forms_separate_classes() {
        let labeled = enumerate(5, false, |_| true).unwrap();
        let classes: BTreeSet<u64> = labeled.iter().map(|h| canonical_mask(h).unwrap()).collect();
        assert_eq!(classes.len(), 34);
        let reps: BTreeSet<u64> = enumerate(5, true, |_| true)
            .unwrap()
            .iter()
            .map(|h| canonical_mask(h).unwrap())
            .collect();
        assert_eq!(classes, reps);
    }

    #[test]
    fn f5_classes_at_five() {
        let has_f5 = |h: &ThreeGraph| find_f5(h).is_some();
        let reps = enumerate(5, true, has_f5).unwrap();
        let f5 = canonical_mask(&ThreeGraph::f5()).unwrap();
        assert!(reps.iter().any(|h| canonical_mask(h).unwrap() == f5));
        let from_labeled: BTreeSet<u64> = enumerate(5, false, has_f5)
            .unwrap()
            .iter()
            .map(|h| canonical_mask(h).unwrap())
            .collect();
        assert_eq!(reps.len(), from_labeled.len());
    }

    #[test]
    fn family_free_generation_matches_filtering() {
        let fam = Family::cancellative();
        for n in 4..=6 {
            let pruned = enumerate_family_free(n, fam, true, |_| true).unwrap().len();
            let filtered = enumerate(n, true, |h| fam.is_free(h)).unwrap().len();
            assert_eq!(pruned, filtered);
        }
    }
}
