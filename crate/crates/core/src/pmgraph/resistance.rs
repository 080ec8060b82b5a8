//! Effective resistance from the graph Laplacian.

use super::linalg::invert;
use super::PolarizedMetrizedGraph;
use crate::ratio::Rat;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Pairwise effective resistance between all vertices, with each edge a
/// resistor of its length. Grounds vertex 0, inverts the reduced
/// Laplacian M and reads off `r(a,b) = M[a][a] - 2 M[a][b] + M[b][b]`.
/// The input must be self-loop free.
pub(crate) fn resistance_matrix(g: &PolarizedMetrizedGraph) -> Vec<Vec<Rat>> {
    let n = g.vertex_count();
    debug_assert!(g.edges().iter().all(|e| e.u != e.v));
    let mut lap = vec![vec![Rat::zero(); n]; n];
    for e in g.edges() {
        let c = Rat::one() / &e.length;
        lap[e.u][e.u] += &c;
        lap[e.v][e.v] += &c;
        lap[e.u][e.v] -= &c;
        lap[e.v][e.u] -= c;
    }
    let reduced: Vec<Vec<Rat>> = (1..n)
        .map(|i| (1..n).map(|j| lap[i][j].clone()).collect())
        .collect();
    let m = invert(&reduced).expect("reduced Laplacian of a connected graph is invertible");
    let at = |a: usize, b: usize| -> Rat {
        if a == 0 || b == 0 {
            Rat::zero()
        } else {
            m[a - 1][b - 1].clone()
        }
    };
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| at(a, a) - crate::ratio::rat_i(2) * at(a, b) + at(b, b))
                .collect()
        })
        .collect()
}

/// Effective resistance between the vertices of `g`; self-loops are
/// handled by splitting them internally.
pub fn vertex_resistance(g: &PolarizedMetrizedGraph) -> Vec<Vec<Rat>> {
    let n = g.vertex_count();
    let (split, _) = g.split_self_loops();
    let full = resistance_matrix(&split);
    full.into_iter()
        .take(n)
        .map(|row| row.into_iter().take(n).collect())
        .collect()
}
