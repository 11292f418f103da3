use crate::error::{Error, Result};
use crate::graph::{Graph, Witness};

/// Default bound on `|V(G)|`; the target is limited to 128 vertices by the
/// domain bitmask.
pub const DEFAULT_HOM_CAP: usize = 512;
const TARGET_BITS: usize = 128;

/// A map `V(G) -> V(P)` sending edges to edges, if one exists.
///
/// Backtracking with forward checking. The next vertex is the unassigned
/// one with the smallest remaining domain, ties broken by larger degree in
/// `G` and then by index.
pub fn find_homomorphism(g: &Graph, p: &Graph) -> Result<Option<Witness>> {
    find_homomorphism_with_cap(g, p, DEFAULT_HOM_CAP)
}

pub fn find_homomorphism_with_cap(g: &Graph, p: &Graph, cap: usize) -> Result<Option<Witness>> {
    if g.n() > cap {
        return Err(Error::SizeLimit { n: g.n(), cap });
    }
    if p.n() > TARGET_BITS {
        return Err(Error::SizeLimit {
            n: p.n(),
            cap: TARGET_BITS,
        });
    }
    if g.n() == 0 {
        return Ok(Some(Witness::homomorphism(Vec::new())));
    }
    if p.n() == 0 {
        return Ok(None);
    }
    let target_adj: Vec<u128> = (0..p.n())
        .map(|v| p.neighbors(v).ones().fold(0, |m, u| m | (1u128 << u)))
        .collect();
    let full: u128 = if p.n() == TARGET_BITS {
        u128::MAX
    } else {
        (1u128 << p.n()) - 1
    };
    // a vertex of G with an edge can only land on a non-isolated target vertex
    let non_isolated = (0..p.n())
        .filter(|&v| target_adj[v] != 0)
        .fold(0u128, |m, v| m | (1 << v));
    let domains: Vec<u128> = (0..g.n())
        .map(|v| if g.degree(v) > 0 { non_isolated } else { full })
        .collect();
    if domains.contains(&0) {
        return Ok(None);
    }
    let nbrs: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).ones().collect()).collect();
    let degree: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut search = HomSearch {
        nbrs: &nbrs,
        degree: &degree,
        target_adj: &target_adj,
        assignment: vec![usize::MAX; g.n()],
    };
    Ok(search
        .solve(domains, g.n())
        .then(|| Witness::homomorphism(search.assignment)))
}

struct HomSearch<'a> {
    nbrs: &'a [Vec<usize>],
    degree: &'a [usize],
    target_adj: &'a [u128],
    assignment: Vec<usize>,
}

impl HomSearch<'_> {
    fn solve(&mut self, domains: Vec<u128>, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let v = (0..domains.len())
            .filter(|&v| self.assignment[v] == usize::MAX)
            .min_by_key(|&v| {
                (
                    domains[v].count_ones(),
                    std::cmp::Reverse(self.degree[v]),
                    v,
                )
            })
            .unwrap();
        let mut options = domains[v];
        while options != 0 {
            let t = options.trailing_zeros() as usize;
            options &= options - 1;
            let mut next = domains.clone();
            let mut dead = false;
            for &u in &self.nbrs[v] {
                if self.assignment[u] == usize::MAX {
                    next[u] &= self.target_adj[t];
                    if next[u] == 0 {
                        dead = true;
                        break;
                    }
                } else if self.target_adj[t] >> self.assignment[u] & 1 == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            next[v] = 1 << t;
            self.assignment[v] = t;
            if self.solve(next, remaining - 1) {
                return true;
            }
            self.assignment[v] = usize::MAX;
        }
        false
    }
}
