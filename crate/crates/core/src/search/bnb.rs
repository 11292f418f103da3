//! Edge-variable branch-and-bound over labeled 3-graphs.
//!
//! Edges are decided in index order. A node carries the chosen edges and the
//! still-undecided edges compatible with them, so forbidden patterns are only
//! ever tested against the newly added edge. The tree is split at a shallow
//! depth into subtrees that run independently and prune only against their
//! own best. Ties are resolved by the lowest subtree index and then by
//! depth-first order, so the whole result, node count included, does not
//! depend on scheduling. A node budget is shared, so budgeted searches run
//! sequentially to stay reproducible.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::enumerate::reduced_search;
use super::space::EdgeSpace;
use super::{Family, Mode, SearchResult, SearchSpec, SEARCH_CAP};
use crate::error::{Error, Result};
use crate::graph::three_partition;
use crate::par::{map_slice, Execution};

/// Depth of the root split.
const SPLIT_DEPTH: usize = 8;
const FLUSH_EVERY: u64 = 256;

/// Exact maximum number of edges of a family-free 3-graph on `n` vertices.
pub fn extremal_number(n: usize, family: Family) -> Result<SearchResult> {
    run_search(&SearchSpec::new(n, family, Mode::MaxEdges))
}

/// Maximum minimum degree among 3-graphs meeting `spec` (its mode is
/// overridden).
pub fn max_min_degree(spec: &SearchSpec) -> Result<SearchResult> {
    let mut spec = spec.clone();
    spec.mode = Mode::MaxMinDegree;
    run_search(&spec)
}

/// Runs `spec` as given. A spent budget is not an error: the best graph found
/// so far is returned with `exhaustive == false`.
pub fn run_search(spec: &SearchSpec) -> Result<SearchResult> {
    if spec.n > SEARCH_CAP {
        return Err(Error::SizeLimit { n: spec.n, cap: SEARCH_CAP });
    }
    if spec.iso_reduction {
        return reduced_search(spec);
    }
    let space = EdgeSpace::new(spec.n, spec.family);
    let mut frontier = Vec::new();
    split(&space, 0, space.full(), SPLIT_DEPTH, &mut frontier);

    let shared = Shared {
        nodes: AtomicU64::new(0),
        stopped: AtomicBool::new(false),
        budget: spec.budget,
    };
    let exec = if spec.budget.is_some() { Execution::Sequential } else { spec.execution };
    let results = map_slice(exec, &frontier, |&(mask, avail)| {
        let mut walker = Walker {
            space: &space,
            spec,
            shared: &shared,
            best: None,
            pending: 0,
        };
        walker.dfs(mask, avail);
        walker.flush();
        walker.best
    });

    let mut best: Option<(usize, u64)> = None;
    for r in results.into_iter().flatten() {
        if best.is_none_or(|(v, _)| r.0 > v) {
            best = Some(r);
        }
    }
    Ok(SearchResult {
        optimum: best.map(|(v, _)| v),
        witness: best.map(|(_, m)| space.to_graph(m)),
        nodes: shared.nodes.load(Ordering::Relaxed),
        exhaustive: !shared.stopped.load(Ordering::Relaxed),
    })
}

/// Unfolds the first `depth` branching levels in depth-first order.
fn split(space: &EdgeSpace, mask: u64, avail: u64, depth: usize, out: &mut Vec<(u64, u64)>) {
    if depth == 0 || avail == 0 {
        out.push((mask, avail));
        return;
    }
    let e = avail.trailing_zeros() as usize;
    let rest = avail & !(1 << e);
    let with = mask | 1 << e;
    split(space, with, space.filter_compatible(with, rest), depth - 1, out);
    split(space, mask, rest, depth - 1, out);
}

struct Shared {
    nodes: AtomicU64,
    stopped: AtomicBool,
    budget: Option<u64>,
}

struct Walker<'a> {
    space: &'a EdgeSpace,
    spec: &'a SearchSpec,
    shared: &'a Shared,
    best: Option<(usize, u64)>,
    pending: u64,
}

impl Walker<'_> {
    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if self.shared.budget.is_some_and(|b| total >= b) {
            self.shared.stopped.store(true, Ordering::Relaxed);
        }
    }

    fn bound(&self, mask: u64, avail: u64) -> usize {
        match self.spec.mode {
            Mode::MaxEdges => (mask.count_ones() + avail.count_ones()) as usize,
            Mode::MaxMinDegree => (0..self.space.n())
                .map(|v| self.space.degree(mask, v) + self.space.degree(avail, v))
                .min()
                .unwrap_or(0) as usize,
        }
    }

    fn dfs(&mut self, mask: u64, avail: u64) {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
        }
        if self.shared.stopped.load(Ordering::Relaxed) {
            return;
        }
        let bound = self.bound(mask, avail);
        if self.best.is_some_and(|(v, _)| bound <= v) {
            return;
        }
        // every completion lies inside mask ∪ avail
        if self.spec.require_non_3partite && self.space.shadow_three_colorable(mask | avail) {
            return;
        }
        if avail == 0 {
            self.leaf(mask);
            return;
        }
        let e = avail.trailing_zeros() as usize;
        let rest = avail & !(1 << e);
        let with = mask | 1 << e;
        self.dfs(with, self.space.filter_compatible(with, rest));
        self.dfs(mask, rest);
    }

    fn leaf(&mut self, mask: u64) {
        // a compatible edge outside the mask gives a supergraph that is at
        // least as good and is reached at another leaf
        let outside = self.space.full() & !mask;
        if self.space.filter_compatible(mask, outside) != 0 {
            return;
        }
        let value = match self.spec.mode {
            Mode::MaxEdges => mask.count_ones(),
            Mode::MaxMinDegree => self.space.min_degree(mask),
        } as usize;
        if self.best.is_some_and(|(v, _)| value <= v) {
            return;
        }
        self.best = Some((value, mask));
    }
}

/// Oracle: scans every edge subset and re-checks it with the detectors and
/// the shadow colouring routine. Exponential in `C(n,3)`; capped at `n = 6`.
pub fn naive_optimum(spec: &SearchSpec) -> Result<Option<usize>> {
    const NAIVE_CAP: usize = 6;
    if spec.n > NAIVE_CAP {
        return Err(Error::SizeLimit { n: spec.n, cap: NAIVE_CAP });
    }
    let space = EdgeSpace::new(spec.n, Family::none());
    let mut best = None;
    for mask in 0..=space.full() {
        let h = space.to_graph(mask);
        if !spec.family.is_free(&h) {
            continue;
        }
        if spec.require_non_3partite && three_partition(&h)?.is_some() {
            continue;
        }
        let v = spec.value(&h);
        if best.is_none_or(|b| v > b) {
            best = Some(v);
        }
    }
    Ok(best)
}
