//! Loop-labelled multigraphs and their contraction rules.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

/// Underlying class of a loop label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LoopBase {
    Omega,
    Beta,
}

/// Label carried by a loop: `ω̂`, `−ω̂` or `β̂`. The negated variant only
/// ever arises from contracting a parallel edge pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LoopLabel {
    pub base: LoopBase,
    pub negated: bool,
}

impl LoopLabel {
    pub const OMEGA: LoopLabel = LoopLabel { base: LoopBase::Omega, negated: false };
    pub const OMEGA_NEG: LoopLabel = LoopLabel { base: LoopBase::Omega, negated: true };
    pub const BETA: LoopLabel = LoopLabel { base: LoopBase::Beta, negated: false };

    /// `deg ω̂ = 2g−2`, `deg(−ω̂) = 2−2g`, `deg β̂ = 2`.
    pub fn degree(&self, g: u32) -> i64 {
        match self.base {
            LoopBase::Omega => {
                let d = 2 * i64::from(g) - 2;
                if self.negated {
                    -d
                } else {
                    d
                }
            }
            LoopBase::Beta => 2,
        }
    }

    pub fn sign(&self) -> i64 {
        if self.negated {
            -1
        } else {
            1
        }
    }
}

/// Multigraph on a finite vertex set with labelled loops; non-loop edges
/// carry no label (each stands for a `Δ̂_ij` factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopLabelledGraph {
    vertices: BTreeSet<u32>,
    loops: Vec<(u32, LoopLabel)>,
    edges: Vec<(u32, u32)>,
}

/// One applicable contraction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contraction {
    /// Rule (i): a loop-free vertex of degree one disappears with its edge.
    DeleteLeaf { vertex: u32 },
    /// Rule (ii): a loop-free degree-two vertex on edges `ij`, `jk` with
    /// `i != k` is smoothed into a single edge `ik`.
    SmoothPath { vertex: u32 },
    /// Rule (iii): a loop-free vertex carrying two parallel edges to one
    /// neighbour is replaced by a `−ω̂` loop at that neighbour.
    ParallelToLoop { vertex: u32 },
}

impl LoopLabelledGraph {
    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Self {
        LoopLabelledGraph {
            vertices: vertices.into_iter().collect(),
            loops: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_loop(&mut self, v: u32, label: LoopLabel) {
        debug_assert!(self.vertices.contains(&v));
        self.loops.push((v, label));
        self.loops.sort_unstable();
    }

    pub fn add_edge(&mut self, u: u32, v: u32) {
        debug_assert!(u != v, "non-loop edges must join distinct vertices");
        debug_assert!(self.vertices.contains(&u) && self.vertices.contains(&v));
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.push(e);
        self.edges.sort_unstable();
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn loops(&self) -> &[(u32, LoopLabel)] {
        &self.loops
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Loops count twice, edge endpoints once.
    pub fn degree(&self, v: u32) -> usize {
        let from_loops = 2 * self.loops.iter().filter(|(w, _)| *w == v).count();
        let from_edges =
            self.edges.iter().filter(|(a, b)| *a == v || *b == v).count();
        from_loops + from_edges
    }

    /// `χ = |V| − |loops| − |edges|`; preserved by every contraction step.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.loops.len() as i64 - self.edges.len() as i64
    }

    fn loops_at(&self, v: u32) -> usize {
        self.loops.iter().filter(|(w, _)| *w == v).count()
    }

    fn edge_neighbours(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    /// Connected components as separate graphs (isolated vertices included).
    pub fn components(&self) -> Vec<LoopLabelledGraph> {
        let verts: Vec<u32> = self.vertices.iter().copied().collect();
        let index = |v: u32| verts.binary_search(&v).unwrap();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
            parent[ra] = rb;
        }
        let mut out: Vec<LoopLabelledGraph> = Vec::new();
        let mut root_of: Vec<(usize, usize)> = Vec::new(); // (root, position in out)
        for (i, &v) in verts.iter().enumerate() {
            let r = find(&mut parent, i);
            let pos = match root_of.iter().find(|(root, _)| *root == r) {
                Some(&(_, pos)) => pos,
                None => {
                    root_of.push((r, out.len()));
                    out.push(LoopLabelledGraph::new(core::iter::empty()));
                    out.len() - 1
                }
            };
            out[pos].vertices.insert(v);
        }
        for &(v, label) in &self.loops {
            let r = find(&mut parent, index(v));
            let pos = root_of.iter().find(|(root, _)| *root == r).unwrap().1;
            out[pos].loops.push((v, label));
        }
        for &(a, b) in &self.edges {
            let r = find(&mut parent, index(a));
            let pos = root_of.iter().find(|(root, _)| *root == r).unwrap().1;
            out[pos].edges.push((a, b));
        }
        out
    }

    /// Every contraction step applicable to the current graph.
    pub fn applicable_contractions(&self) -> Vec<Contraction> {
        let mut steps = Vec::new();
        for &v in &self.vertices {
            if self.loops_at(v) != 0 {
                continue;
            }
            let nbrs = self.edge_neighbours(v);
            match nbrs.len() {
                1 => steps.push(Contraction::DeleteLeaf { vertex: v }),
                2 => {
                    if nbrs[0] == nbrs[1] {
                        steps.push(Contraction::ParallelToLoop { vertex: v });
                    } else {
                        steps.push(Contraction::SmoothPath { vertex: v });
                    }
                }
                _ => {}
            }
        }
        steps
    }

    /// Applies one step; panics if it does not match the graph (the step
    /// must come from [`Self::applicable_contractions`]).
    pub fn apply_contraction(&self, step: Contraction) -> LoopLabelledGraph {
        let mut g = self.clone();
        match step {
            Contraction::DeleteLeaf { vertex } => {
                let pos = g
                    .edges
                    .iter()
                    .position(|&(a, b)| a == vertex || b == vertex)
                    .expect("leaf edge");
                g.edges.remove(pos);
                g.vertices.remove(&vertex);
            }
            Contraction::SmoothPath { vertex } => {
                let nbrs = g.edge_neighbours(vertex);
                assert_eq!(nbrs.len(), 2);
                let (i, k) = (nbrs[0], nbrs[1]);
                assert_ne!(i, k);
                g.edges.retain(|&(a, b)| a != vertex && b != vertex);
                g.vertices.remove(&vertex);
                g.add_edge(i, k);
            }
            Contraction::ParallelToLoop { vertex } => {
                let nbrs = g.edge_neighbours(vertex);
                assert_eq!(nbrs.len(), 2);
                assert_eq!(nbrs[0], nbrs[1]);
                let j = nbrs[0];
                assert_ne!(j, vertex);
                g.edges.retain(|&(a, b)| a != vertex && b != vertex);
                g.vertices.remove(&vertex);
                g.add_loop(j, LoopLabel::OMEGA_NEG);
            }
        }
        g
    }

    /// Applies contraction steps until none is left. Terminates since each
    /// step removes one vertex.
    pub fn reduce(&self) -> LoopLabelledGraph {
        let mut g = self.clone();
        while let Some(&step) = g.applicable_contractions().first() {
            g = g.apply_contraction(step);
        }
        g
    }

    pub fn is_minimal(&self) -> bool {
        self.applicable_contractions().is_empty()
    }

    /// Disjoint union; vertex sets must not overlap.
    pub fn disjoint_union(&self, other: &LoopLabelledGraph) -> LoopLabelledGraph {
        debug_assert!(self.vertices.is_disjoint(&other.vertices));
        let mut g = self.clone();
        g.vertices.extend(other.vertices.iter().copied());
        g.loops.extend(other.loops.iter().copied());
        g.edges.extend(other.edges.iter().copied());
        g.loops.sort_unstable();
        g.edges.sort_unstable();
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dumbbell(s: LoopLabel, t: LoopLabel) -> LoopLabelledGraph {
        let mut g = LoopLabelledGraph::new([1, 2]);
        g.add_loop(1, s);
        g.add_loop(2, t);
        g.add_edge(1, 2);
        g
    }

    #[test]
    fn dumbbell_is_minimal() {
        let g = dumbbell(LoopLabel::OMEGA, LoopLabel::BETA);
        assert!(g.is_minimal());
        assert_eq!(g.euler_characteristic(), -1);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn path_smooths_to_dumbbell() {
        // A(loop ω) - B - C(loop β)
        let mut g = LoopLabelledGraph::new([1, 2, 3]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(3, LoopLabel::BETA);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        let steps = g.applicable_contractions();
        assert_eq!(steps, alloc::vec![Contraction::SmoothPath { vertex: 2 }]);
        let reduced = g.reduce();
        let mut expect = LoopLabelledGraph::new([1, 3]);
        expect.add_loop(1, LoopLabel::OMEGA);
        expect.add_loop(3, LoopLabel::BETA);
        expect.add_edge(1, 3);
        assert_eq!(reduced, expect);
    }

    #[test]
    fn parallel_pair_becomes_negative_loop() {
        // two parallel edges 1-2 plus a loop at 1
        let mut g = LoopLabelledGraph::new([1, 2]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        let reduced = g.reduce();
        let mut expect = LoopLabelledGraph::new([1]);
        expect.add_loop(1, LoopLabel::OMEGA);
        expect.add_loop(1, LoopLabel::OMEGA_NEG);
        assert_eq!(reduced, expect);
    }

    #[test]
    fn chi_preserved_step_by_step() {
        let mut g = LoopLabelledGraph::new([1, 2, 3, 4]);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 1);
        g.add_edge(3, 4);
        let mut cur = g;
        loop {
            let chi = cur.euler_characteristic();
            let steps = cur.applicable_contractions();
            if steps.is_empty() {
                break;
            }
            for &s in &steps {
                assert_eq!(cur.apply_contraction(s).euler_characteristic(), chi);
            }
            cur = cur.apply_contraction(steps[0]);
        }
    }

    #[test]
    fn tree_reduces_to_point() {
        let mut g = LoopLabelledGraph::new([1, 2, 3, 4, 5]);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(2, 4);
        g.add_edge(4, 5);
        let reduced = g.reduce();
        assert_eq!(reduced.vertex_count(), 1);
        assert!(reduced.loops().is_empty());
        assert!(reduced.edges().is_empty());
    }
}
