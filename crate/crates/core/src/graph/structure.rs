//! Exact independence numbers and 3-partitions by bitmask backtracking.

use super::{Graph, ThreeGraph, Witness};
use crate::error::{Error, Result};

pub const DEFAULT_INDEPENDENCE_CAP: usize = 40;
pub const DEFAULT_COLORING_CAP: usize = 64;
const MASK_BITS: usize = 128;

type Mask = u128;

fn masks(g: &Graph) -> Vec<Mask> {
    (0..g.n())
        .map(|v| g.neighbors(v).ones().fold(0, |m, u| m | (1 << u)))
        .collect()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MASK_BITS);
    if n > cap {
        Err(Error::SizeLimit { n, cap })
    } else {
        Ok(())
    }
}

fn bits(m: Mask) -> impl Iterator<Item = usize> {
    let mut m = m;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

struct Mis<'a> {
    adj: &'a [Mask],
    best: Mask,
}

impl Mis<'_> {
    fn search(&mut self, mut cand: Mask, mut cur: Mask) {
        // vertices of degree <= 1 inside the candidate set are always safe to take
        loop {
            let mut changed = false;
            for v in bits(cand) {
                if cand & (1 << v) == 0 {
                    continue;
                }
                let nb = self.adj[v] & cand;
                if nb.count_ones() <= 1 {
                    cur |= 1 << v;
                    cand &= !(nb | (1 << v));
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if cur.count_ones() + cand.count_ones() <= self.best.count_ones() {
            return;
        }
        if cand == 0 {
            self.best = cur;
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        self.search(cand & !self.adj[v] & !(1 << v), cur | (1 << v));
        self.search(cand & !(1 << v), cur);
    }
}

/// A maximum independent set of `g` (lexicographic tie-break is not
/// guaranteed; the size is exact).
pub fn max_independent_set(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    check_cap(g.n(), cap)?;
    let adj = masks(g);
    let all: Mask = if g.n() == 0 {
        0
    } else if g.n() == MASK_BITS {
        Mask::MAX
    } else {
        (1 << g.n()) - 1
    };
    let mut mis = Mis { adj: &adj, best: 0 };
    mis.search(all, 0);
    Ok(bits(mis.best).collect())
}

/// `α(H)`, the largest vertex set meeting every edge at most once.
/// Computed on the shadow, where the two notions coincide.
pub fn independence_number(h: &ThreeGraph) -> Result<usize> {
    independence_number_with_cap(h, DEFAULT_INDEPENDENCE_CAP)
}

pub fn independence_number_with_cap(h: &ThreeGraph, cap: usize) -> Result<usize> {
    Ok(max_independent_set(&h.shadow(), cap)?.len())
}

struct Coloring<'a> {
    adj: &'a [Mask],
    n: usize,
    color: Vec<u8>,
}

const UNCOLORED: u8 = u8::MAX;

impl Coloring<'_> {
    fn used(&self, v: usize) -> u8 {
        bits(self.adj[v])
            .filter(|&u| self.color[u] != UNCOLORED)
            .fold(0u8, |m, u| m | (1 << self.color[u]))
    }

    fn solve(&mut self, max_used: u8) -> bool {
        // DSatur: most constrained uncolored vertex, ties by degree then index
        let next = (0..self.n)
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| {
                (
                    self.used(v).count_ones(),
                    self.adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            });
        let Some(v) = next else {
            return true;
        };
        let forbidden = self.used(v);
        let limit = (max_used + 1).min(3);
        for c in 0..limit {
            if forbidden & (1 << c) != 0 {
                continue;
            }
            self.color[v] = c;
            if self.solve(max_used.max(c + 1)) {
                return true;
            }
        }
        self.color[v] = UNCOLORED;
        false
    }
}

/// A proper 3-colouring of `g` if one exists.
pub fn three_coloring(g: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    check_cap(g.n(), cap)?;
    let adj = masks(g);
    let mut c = Coloring {
        adj: &adj,
        n: g.n(),
        color: vec![UNCOLORED; g.n()],
    };
    Ok(c
        .solve(0)
        .then(|| c.color.iter().map(|&x| x as usize).collect()))
}

/// A partition `V1 ∪ V2 ∪ V3` meeting every edge once in each part, found as
/// a proper 3-colouring of the shadow.
pub fn three_partition(h: &ThreeGraph) -> Result<Option<Witness>> {
    three_partition_with_cap(h, DEFAULT_COLORING_CAP)
}

pub fn three_partition_with_cap(h: &ThreeGraph, cap: usize) -> Result<Option<Witness>> {
    Ok(three_coloring(&h.shadow(), cap)?.map(Witness::partition))
}
