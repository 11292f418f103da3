use serde::{Deserialize, Serialize};

use super::{Graph, ThreeGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    F5,
    K4Minus,
    K4Shadow,
    Clique,
    Triangle,
    Partition,
    Homomorphism,
}

/// A re-checkable certificate for a pattern found in a host (hyper)graph.
///
/// Vertex conventions: `F5` lists `[a, b, c, d, e]` for the edges
/// `abc, abd, cde`; `K4Minus` lists `[a, b, c, d]` with apex `a` for
/// `abc, abd, acd`; `K4Shadow` lists the four clique vertices and one
/// covering 3-edge per pair. `Partition` and `Homomorphism` carry their
/// data in `mapping` (vertex to part, vertex to target vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mapping: Vec<usize>,
}

fn sorted3(a: usize, b: usize, c: usize) -> Vec<usize> {
    let mut t = vec![a, b, c];
    t.sort_unstable();
    t
}

fn distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

impl Witness {
    pub fn f5(a: usize, b: usize, c: usize, d: usize, e: usize) -> Self {
        Witness {
            kind: WitnessKind::F5,
            vertices: vec![a, b, c, d, e],
            edges: vec![sorted3(a, b, c), sorted3(a, b, d), sorted3(c, d, e)],
            mapping: Vec::new(),
        }
    }

    pub fn k4_minus(apex: usize, b: usize, c: usize, d: usize) -> Self {
        Witness {
            kind: WitnessKind::K4Minus,
            vertices: vec![apex, b, c, d],
            edges: vec![sorted3(apex, b, c), sorted3(apex, b, d), sorted3(apex, c, d)],
            mapping: Vec::new(),
        }
    }

    pub fn clique(vertices: Vec<usize>) -> Self {
        let mut edges = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                edges.push(vec![a.min(b), a.max(b)]);
            }
        }
        let kind = if vertices.len() == 3 {
            WitnessKind::Triangle
        } else {
            WitnessKind::Clique
        };
        Witness {
            kind,
            vertices,
            edges,
            mapping: Vec::new(),
        }
    }

    pub fn partition(parts: Vec<usize>) -> Self {
        Witness {
            kind: WitnessKind::Partition,
            vertices: Vec::new(),
            edges: Vec::new(),
            mapping: parts,
        }
    }

    pub fn homomorphism(map: Vec<usize>) -> Self {
        Witness {
            kind: WitnessKind::Homomorphism,
            vertices: Vec::new(),
            edges: Vec::new(),
            mapping: map,
        }
    }

    fn edges_in(&self, h: &ThreeGraph) -> bool {
        self.edges
            .iter()
            .all(|e| e.len() == 3 && h.contains(e[0], e[1], e[2]))
    }

    /// Re-checks a 3-graph witness against `h`.
    pub fn validate_three(&self, h: &ThreeGraph) -> bool {
        let v = &self.vertices;
        match self.kind {
            WitnessKind::F5 => {
                v.len() == 5
                    && distinct(v)
                    && self.edges
                        == vec![
                            sorted3(v[0], v[1], v[2]),
                            sorted3(v[0], v[1], v[3]),
                            sorted3(v[2], v[3], v[4]),
                        ]
                    && self.edges_in(h)
            }
            WitnessKind::K4Minus => {
                v.len() == 4
                    && distinct(v)
                    && self.edges
                        == vec![
                            sorted3(v[0], v[1], v[2]),
                            sorted3(v[0], v[1], v[3]),
                            sorted3(v[0], v[2], v[3]),
                        ]
                    && self.edges_in(h)
            }
            WitnessKind::K4Shadow => {
                if v.len() != 4 || !distinct(v) || !self.edges_in(h) {
                    return false;
                }
                (0..4).all(|i| {
                    (i + 1..4).all(|j| {
                        self.edges
                            .iter()
                            .any(|e| e.contains(&v[i]) && e.contains(&v[j]))
                    })
                })
            }
            WitnessKind::Partition => {
                self.mapping.len() == h.n()
                    && self.mapping.iter().all(|&p| p < 3)
                    && h.edges().iter().all(|&[a, b, c]| {
                        let (x, y, z) = (self.mapping[a], self.mapping[b], self.mapping[c]);
                        x != y && y != z && x != z
                    })
            }
            _ => false,
        }
    }

    /// Re-checks a clique or triangle witness against `g`.
    pub fn validate_graph(&self, g: &Graph) -> bool {
        match self.kind {
            WitnessKind::Clique | WitnessKind::Triangle => {
                let v = &self.vertices;
                distinct(v)
                    && v.iter().all(|&x| x < g.n())
                    && (0..v.len()).all(|i| (i + 1..v.len()).all(|j| g.has_edge(v[i], v[j])))
            }
            _ => false,
        }
    }

    /// Re-checks a homomorphism witness from `g` into `target`.
    pub fn validate_homomorphism(&self, g: &Graph, target: &Graph) -> bool {
        self.kind == WitnessKind::Homomorphism
            && self.mapping.len() == g.n()
            && self.mapping.iter().all(|&x| x < target.n())
            && g
                .edges()
                .iter()
                .all(|&[a, b]| target.has_edge(self.mapping[a], self.mapping[b]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_witness_validates_on_f5() {
        let w = Witness::f5(0, 1, 2, 3, 4);
        assert!(w.validate_three(&ThreeGraph::f5()));
        let w = Witness::f5(0, 1, 2, 4, 3);
        assert!(!w.validate_three(&ThreeGraph::f5()));
    }

    #[test]
    fn partition_witness() {
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        assert!(Witness::partition(vec![0, 1, 2]).validate_three(&h));
        assert!(!Witness::partition(vec![0, 0, 2]).validate_three(&h));
    }
}
