//! Generators for the named constructions: balanced complete 3-partite
//! 3-graphs, wheel blowups, uniform blowups, the circulant graphs `Γ_d`,
//! and the seven-part `F5`-free witness whose shadow contains a `K4`.

use crate::error::{Error, Result};
use crate::graph::{Graph, ThreeGraph};

/// `T3(n,3)`: part sizes differ by at most one, larger parts first.
pub fn balanced_turan(n: usize) -> ThreeGraph {
    let parts = [n.div_ceil(3), (n + 1) / 3, n / 3];
    complete_three_partite(parts)
}

pub fn complete_three_partite(parts: [usize; 3]) -> ThreeGraph {
    ThreeGraph::new(3, [[0, 1, 2]])
        .expect("single edge")
        .blowup(&parts)
        .expect("three classes")
}

/// The 3-uniform 5-wheel: hub `0`, rim `1..=5`, edges `0 v_i v_{i+1}`.
pub fn wheel() -> ThreeGraph {
    ThreeGraph::new(6, (0..5).map(|i| [0, 1 + i, 1 + (i + 1) % 5])).expect("valid wheel")
}

/// `W5[x, y1..y5]`: the hub class comes first, then the rim classes in order.
pub fn wheel_blowup(x: usize, y: [usize; 5]) -> ThreeGraph {
    let mut sizes = vec![x];
    sizes.extend(y);
    wheel().blowup(&sizes).expect("six classes")
}

/// Closed form for the minimum degree of a wheel blowup with all classes
/// nonempty: the hub class sees `Σ y_i y_{i+1}`, rim class `i` sees
/// `x (y_{i-1} + y_{i+1})`.
pub fn wheel_min_degree_formula(x: usize, y: [usize; 5]) -> usize {
    let hub: usize = (0..5).map(|i| y[i] * y[(i + 1) % 5]).sum();
    (0..5)
        .map(|i| x * (y[(i + 4) % 5] + y[(i + 1) % 5]))
        .fold(hub, usize::min)
}

/// Edge count `Σ x·y_i·y_{i+1}`.
pub fn wheel_edge_count(x: usize, y: [usize; 5]) -> usize {
    (0..5).map(|i| x * y[i] * y[(i + 1) % 5]).sum()
}

/// `H[m]`: each vertex replaced by `m` copies.
pub fn uniform_blowup(h: &ThreeGraph, m: usize) -> Result<ThreeGraph> {
    if m == 0 {
        return Err(Error::PreconditionViolated("blowup factor must be at least 1".into()));
    }
    h.blowup(&vec![m; h.n()])
}

/// Offsets `1, 4, 7, …, 3⌈d/2⌉ - 2` defining `Γ_d`.
pub fn gamma_offsets(d: usize) -> Vec<usize> {
    let top = 3 * d.div_ceil(2) - 2;
    (1..=top).step_by(3).collect()
}

/// `Γ_d` on `3d - 1` vertices: `i ~ i ± o (mod 3d - 1)` for each offset `o`.
pub fn gamma_graph(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "d",
            value: 0,
            range: "d >= 1",
        });
    }
    let m = 3 * d - 1;
    let offsets = gamma_offsets(d);
    let g = Graph::new(
        m,
        (0..m).flat_map(|i| offsets.iter().map(move |&o| [i, (i + o) % m])),
    )?;
    debug_assert_eq!(g.regular_degree(), Some(d));
    Ok(g)
}

/// Vertex layout of [`tightness_witness`].
///
/// Vertices `0..4` are the clique vertices `1, 2, 3, 4`, `4..10` are the
/// subdivision vertices `x12, x13, x14, x23, x24, x34`, followed by
/// `Y1, Y2, Y3, Z1, Z2, Z3` as consecutive ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessLayout {
    pub y: [std::ops::Range<usize>; 3],
    pub z: [std::ops::Range<usize>; 3],
}

#[derive(Clone, Debug)]
pub struct TightnessWitness {
    pub graph: ThreeGraph,
    pub layout: WitnessLayout,
    /// Which of the four pair classes `E1..E4` each vertex was assigned
    /// (`1..=4`).
    pub assignment: Vec<u8>,
}

/// Subdivision vertex for the clique pair `{i, j}`, `i < j < 4`.
pub fn subdivision_vertex(i: usize, j: usize) -> usize {
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    4 + PAIRS.iter().position(|&p| p == (i.min(j), i.max(j))).expect("clique pair")
}

/// Default part sizes `[y1, y2, y3, z1, z2, z3]` for `n` vertices:
/// `|Y_i| = round((n - 10)/√12)` capped by a balanced share of `n - 10`,
/// `|Z_i|` the rest of that share.
pub fn default_witness_parts(n: usize) -> Result<[usize; 6]> {
    if n < 13 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n as i64,
            range: "n >= 13",
        });
    }
    let rest = n - 10;
    let y = (rest as f64 / 12f64.sqrt()).round() as usize;
    let mut parts = [0; 6];
    for k in 0..3 {
        let share = rest / 3 + usize::from(k < rest % 3);
        parts[k] = y.min(share);
        parts[k + 3] = share - parts[k];
    }
    Ok(parts)
}

/// The seven-part `F5`-free 3-graph whose shadow contains `K4`.
///
/// The pairs of the complete 3-partite graph on `Y1∪Z1, Y2∪Z2, Y3∪Z3` are
/// split into `E1 = Y2×Y3`, `E2 = Y1×Y3`, `E3 = Y1×Y2` and `E4` (the rest).
/// Vertices of `Y1 ∪ Z1 ∪ {1, x23, x24, x34}` are joined to every pair of
/// `E1`, those of `Y2 ∪ Z2 ∪ {2, x13, x14}` to `E2`, those of
/// `Y3 ∪ Z3 ∪ {3, x12}` to `E3`, and vertex `4` to `E4`. Inside `X` the
/// edges are the triples `{i, j, x_ij}`.
pub fn tightness_witness(n: usize, parts: Option<[usize; 6]>) -> Result<TightnessWitness> {
    let parts = match parts {
        Some(p) => {
            let got: usize = p.iter().sum();
            if n < 10 || got != n - 10 {
                return Err(Error::BadPartition {
                    expected: n.saturating_sub(10),
                    got,
                });
            }
            p
        }
        None => default_witness_parts(n)?,
    };
    let mut start = 10;
    let mut ranges: Vec<std::ops::Range<usize>> = Vec::with_capacity(6);
    for &s in &parts {
        ranges.push(start..start + s);
        start += s;
    }
    let y = [ranges[0].clone(), ranges[1].clone(), ranges[2].clone()];
    let z = [ranges[3].clone(), ranges[4].clone(), ranges[5].clone()];
    let class = |k: usize| y[k].clone().chain(z[k].clone());

    let pairs_between = |a: Vec<usize>, b: Vec<usize>| {
        a.iter()
            .flat_map(|&u| b.iter().map(move |&v| [u, v]))
            .collect::<Vec<_>>()
    };
    let ys = |k: usize| y[k].clone().collect::<Vec<_>>();
    let e1 = pairs_between(ys(1), ys(2));
    let e2 = pairs_between(ys(0), ys(2));
    let e3 = pairs_between(ys(0), ys(1));
    let mut e4 = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for u in class(a) {
            for v in class(b) {
                let both_y = y[a].contains(&u) && y[b].contains(&v);
                if !both_y {
                    e4.push([u, v]);
                }
            }
        }
    }

    let mut assignment = vec![0u8; n];
    for v in class(0).chain([0, subdivision_vertex(1, 2), subdivision_vertex(1, 3), subdivision_vertex(2, 3)]) {
        assignment[v] = 1;
    }
    for v in class(1).chain([1, subdivision_vertex(0, 2), subdivision_vertex(0, 3)]) {
        assignment[v] = 2;
    }
    for v in class(2).chain([2, subdivision_vertex(0, 1)]) {
        assignment[v] = 3;
    }
    assignment[3] = 4;

    let classes = [&e1, &e2, &e3, &e4];
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push([i, j, subdivision_vertex(i, j)]);
        }
    }
    for (v, &a) in assignment.iter().enumerate() {
        for &[p, q] in classes[usize::from(a) - 1] {
            edges.push([v, p, q]);
        }
    }
    Ok(TightnessWitness {
        graph: ThreeGraph::new(n, edges)?,
        layout: WitnessLayout { y, z },
        assignment,
    })
}

impl TightnessWitness {
    /// The pair class assigned to `v`, as a graph.
    pub fn assigned_link(&self, v: usize) -> Graph {
        let n = self.graph.n();
        let y = &self.layout.y;
        let z = &self.layout.z;
        let in_class = |k: usize, u: usize| y[k].contains(&u) || z[k].contains(&u);
        let part = |u: usize| (0..3).find(|&k| in_class(k, u));
        let is_y = |u: usize| y.iter().any(|r| r.contains(&u));
        let mut pairs = Vec::new();
        for u in 10..n {
            for w in u + 1..n {
                let (Some(pu), Some(pw)) = (part(u), part(w)) else {
                    continue;
                };
                if pu == pw {
                    continue;
                }
                let class = if is_y(u) && is_y(w) {
                    // the Y-Y pair between parts pu, pw is E_k for the third part k
                    (3 - pu - pw) as u8 + 1
                } else {
                    4
                };
                if class == self.assignment[v] {
                    pairs.push([u, w]);
                }
            }
        }
        Graph::new(n, pairs).expect("pairs in range")
    }
}
