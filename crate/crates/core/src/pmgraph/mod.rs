//! Polarized metrized graphs and their non-archimedean invariants.
//!
//! A graph is given by vertex genus marks `q(v) >= 0` and edges with
//! positive rational lengths (self-loops allowed). The canonical divisor
//! is derived as `K(v) = 2q(v) - 2 + valence(v)`, the genus as
//! `g = b_1 + Σ q(v)`. One exact primitive, effective resistance from a
//! grounded Laplacian solve, drives the canonical and admissible measures,
//! the Green's function and the invariants δ, τ, ε, φ, δ_i and α.

mod green;
mod invariants;
mod linalg;
mod measure;
mod resistance;

pub use green::{green_diagonal, green_value, point_resistance, theta};
pub use invariants::{invariants, tau, InvariantReport};
pub use measure::{admissible_measure, canonical_measure, Measure};
pub use resistance::vertex_resistance;

use crate::error::GraphError;
use crate::ratio::Rat;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// An edge of positive rational length; `u == v` is a self-loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: Rat,
}

/// A point of the metric graph: a vertex, or an interior point of an edge
/// at arclength `t` from the edge's `u` endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Vertex(usize),
    On { edge: usize, t: Rat },
}

/// Connected metric graph with vertex genus marks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedMetrizedGraph {
    q: Vec<u32>,
    edges: Vec<Edge>,
}

impl PolarizedMetrizedGraph {
    /// Validates lengths, vertex references and connectivity.
    /// `K(v) >= 0` is deliberately not enforced here; operations that need
    /// the polarization check it themselves.
    pub fn new(q: Vec<u32>, edges: Vec<(usize, usize, Rat)>) -> Result<Self, GraphError> {
        if q.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut es = Vec::with_capacity(edges.len());
        for (i, (u, v, length)) in edges.into_iter().enumerate() {
            if u >= q.len() || v >= q.len() {
                return Err(GraphError::VertexOutOfRange { edge: i });
            }
            if !length.is_positive() {
                return Err(GraphError::NonpositiveLength { edge: i });
            }
            es.push(Edge { u, v, length });
        }
        let g = PolarizedMetrizedGraph { q, edges: es };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.q.len()
    }

    pub fn genus_mark(&self, v: usize) -> u32 {
        self.q[v]
    }

    pub fn genus_marks(&self) -> &[u32] {
        &self.q
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Self-loops count twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum()
    }

    /// `K(v) = 2q(v) - 2 + valence(v)`; may be negative on unpolarizable
    /// inputs (e.g. a bare segment).
    pub fn canonical_divisor(&self, v: usize) -> i64 {
        2 * i64::from(self.q[v]) - 2 + self.valence(v) as i64
    }

    /// First Betti number `|E| - |V| + 1` of a connected graph.
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.q.len()
    }

    /// `g = b_1 + Σ q(v)`.
    pub fn genus(&self) -> u32 {
        self.betti() as u32 + self.q.iter().sum::<u32>()
    }

    /// Total length δ.
    pub fn total_length(&self) -> Rat {
        self.edges.iter().fold(Rat::zero(), |acc, e| acc + &e.length)
    }

    pub fn is_tree(&self) -> bool {
        self.betti() == 0
    }

    fn is_connected(&self) -> bool {
        let n = self.q.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }

    /// Endpoints of `edge` disconnected in `G - edge`?
    pub fn is_bridge(&self, edge: usize) -> bool {
        let e = &self.edges[edge];
        if e.u == e.v {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.q.len()).collect();
        for (i, f) in self.edges.iter().enumerate() {
            if i != edge {
                let (a, b) = (find(&mut parent, f.u), find(&mut parent, f.v));
                parent[a] = b;
            }
        }
        find(&mut parent, e.u) != find(&mut parent, e.v)
    }

    /// Inserts a genus-0 vertex at arclength `t` on `edge`. Genus, total
    /// length and every invariant are unchanged.
    pub fn subdivide(&self, edge: usize, t: &Rat) -> Result<Self, GraphError> {
        let e = self.edges.get(edge).ok_or(GraphError::EdgeOutOfRange { edge })?;
        if !t.is_positive() || *t >= e.length {
            return Err(GraphError::SubdivisionOutOfRange);
        }
        let mut q = self.q.clone();
        let new_v = q.len();
        q.push(0);
        let mut edges = self.edges.clone();
        let Edge { u, v, length } = edges[edge].clone();
        edges[edge] = Edge { u, v: new_v, length: t.clone() };
        edges.push(Edge { u: new_v, v, length: length - t });
        Ok(PolarizedMetrizedGraph { q, edges })
    }

    /// Splits every self-loop at its midpoint so the Laplacian solve sees
    /// only edges with distinct endpoints. Returns the mapping from new
    /// edge index to the original edge it came from.
    pub(crate) fn split_self_loops(&self) -> (Self, Vec<usize>) {
        let mut g = self.clone();
        let mut origin: Vec<usize> = (0..self.edges.len()).collect();
        while let Some(i) = g.edges.iter().position(|e| e.u == e.v) {
            let half = &g.edges[i].length / crate::ratio::rat_i(2);
            g = g.subdivide(i, &half).expect("midpoint is interior");
            origin.push(origin[i]);
        }
        (g, origin)
    }

    /// Subdivides so the given points become vertices; returns the new
    /// graph and the vertex index of each point. Points on the same edge
    /// are handled in arclength order.
    pub fn with_vertices_at(&self, points: &[Point]) -> Result<(Self, Vec<usize>), GraphError> {
        let mut g = self.clone();
        let mut ids: Vec<Option<usize>> = points.iter().map(|_| None).collect();
        // interior points grouped per edge, sorted by t
        let mut by_edge: Vec<(usize, Rat, usize)> = Vec::new(); // (edge, t, point idx)
        for (k, p) in points.iter().enumerate() {
            match p {
                Point::Vertex(v) => {
                    if *v >= g.q.len() {
                        return Err(GraphError::VertexOutOfRange { edge: 0 });
                    }
                    ids[k] = Some(*v);
                }
                Point::On { edge, t } => by_edge.push((*edge, t.clone(), k)),
            }
        }
        by_edge.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut cur_edge = usize::MAX;
        let mut consumed = Rat::zero(); // arclength already split off cur segment
        let mut segment = usize::MAX; // index of the remaining tail segment
        for (edge, t, k) in by_edge {
            if edge >= self.edges.len() {
                return Err(GraphError::EdgeOutOfRange { edge });
            }
            if edge != cur_edge {
                cur_edge = edge;
                consumed = Rat::zero();
                segment = edge;
            }
            let local = &t - &consumed;
            if local.is_zero() && !consumed.is_zero() {
                // coincides with the previously inserted vertex
                ids[k] = Some(g.q.len() - 1);
                continue;
            }
            if local.is_zero() {
                ids[k] = Some(g.edges[segment].u);
                continue;
            }
            if local == g.edges[segment].length {
                ids[k] = Some(g.edges[segment].v);
                continue;
            }
            g = g.subdivide(segment, &local)?;
            ids[k] = Some(g.q.len() - 1);
            consumed = t;
            segment = g.edges.len() - 1;
        }
        Ok((g, ids.into_iter().map(|x| x.unwrap()).collect()))
    }
}

pub(crate) fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_i};
    use alloc::vec;

    pub(crate) fn circle(len: Rat, q: u32) -> PolarizedMetrizedGraph {
        PolarizedMetrizedGraph::new(vec![q], vec![(0, 0, len)]).unwrap()
    }

    #[test]
    fn derived_quantities() {
        let g = circle(rat(3, 2), 0);
        assert_eq!(g.genus(), 1);
        assert_eq!(g.valence(0), 2);
        assert_eq!(g.canonical_divisor(0), 0);
        assert_eq!(g.total_length(), rat(3, 2));

        let bridge = PolarizedMetrizedGraph::new(
            vec![1, 1],
            vec![(0, 1, rat_i(1))],
        )
        .unwrap();
        assert_eq!(bridge.genus(), 2);
        assert_eq!(bridge.canonical_divisor(0), 1);
        let deg: i64 = (0..2).map(|v| bridge.canonical_divisor(v)).sum();
        assert_eq!(deg, 2 * i64::from(bridge.genus()) - 2);
    }

    #[test]
    fn rejects_invalid() {
        assert_eq!(
            PolarizedMetrizedGraph::new(vec![0, 0], vec![]).unwrap_err(),
            GraphError::Disconnected
        );
        assert_eq!(
            PolarizedMetrizedGraph::new(vec![0], vec![(0, 0, rat_i(0))]).unwrap_err(),
            GraphError::NonpositiveLength { edge: 0 }
        );
        assert_eq!(
            PolarizedMetrizedGraph::new(vec![0], vec![(0, 1, rat_i(1))]).unwrap_err(),
            GraphError::VertexOutOfRange { edge: 0 }
        );
    }

    #[test]
    fn subdivision_splits_circle() {
        let g = circle(rat_i(2), 0);
        let s = g.subdivide(0, &rat_i(1)).unwrap();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.edges().len(), 2);
        assert_eq!(s.genus(), 1);
        assert_eq!(s.total_length(), rat_i(2));
        assert!(g.subdivide(0, &rat_i(2)).is_err());
        assert!(g.subdivide(0, &rat_i(0)).is_err());
    }

    #[test]
    fn subdivision_preserves_genus_on_bridge() {
        let bridge =
            PolarizedMetrizedGraph::new(vec![1, 1], vec![(0, 1, rat_i(2))]).unwrap();
        let s = bridge.subdivide(0, &rat_i(1)).unwrap();
        assert_eq!(s.genus(), 2);
        assert_eq!(s.canonical_divisor(2), 0);
    }

    #[test]
    fn bridge_detection() {
        // triangle with a pendant edge
        let g = PolarizedMetrizedGraph::new(
            vec![0, 0, 0, 1],
            vec![
                (0, 1, rat_i(1)),
                (1, 2, rat_i(1)),
                (2, 0, rat_i(1)),
                (2, 3, rat_i(1)),
            ],
        )
        .unwrap();
        assert!(!g.is_bridge(0));
        assert!(!g.is_bridge(1));
        assert!(!g.is_bridge(2));
        assert!(g.is_bridge(3));
        // parallel edges are never bridges
        let p = PolarizedMetrizedGraph::new(
            vec![0, 0],
            vec![(0, 1, rat_i(1)), (0, 1, rat_i(1))],
        )
        .unwrap();
        assert!(!p.is_bridge(0) && !p.is_bridge(1));
    }

    #[test]
    fn self_loop_split() {
        let g = circle(rat_i(3), 1);
        let (s, origin) = g.split_self_loops();
        assert_eq!(s.vertex_count(), 2);
        assert_eq!(s.edges().len(), 2);
        assert_eq!(origin, vec![0, 0]);
        assert_eq!(s.genus(), 2);
    }
}
