//! Graph invariants entering the local height contributions.

use super::green::{PolarizedSystem, System};
use super::PolarizedMetrizedGraph;
use crate::error::Error;
use crate::ratio::{rat_i, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// All invariants of a polarized metrized graph, exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub genus: u32,
    /// total length
    pub delta: Rat,
    pub tau: Rat,
    pub epsilon: Rat,
    pub phi: Rat,
    /// `delta/8 - tau/2`, non-negative, zero exactly on trees
    pub alpha: Rat,
    /// length decomposition by edge type, indices `0 ..= genus/2`;
    /// entry `i >= 1` is the total length of bridges separating marked
    /// genus `i` from `genus - i`, entry `0` collects the rest
    pub delta_parts: Vec<Rat>,
}

/// Tau invariant; defined for every connected graph, polarized or not.
pub fn tau(g: &PolarizedMetrizedGraph) -> Rat {
    System::build(g).tau()
}

/// Genus carried by the component of `G - edge` containing `side`.
fn side_genus(g: &PolarizedMetrizedGraph, edge: usize, side: usize) -> u32 {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, e) in g.edges().iter().enumerate() {
        if i != edge {
            let (a, b) = (super::find(&mut parent, e.u), super::find(&mut parent, e.v));
            parent[a] = b;
        }
    }
    let root = super::find(&mut parent, side);
    let mut vertices = 0usize;
    let mut marks = 0u32;
    for v in 0..n {
        if super::find(&mut parent, v) == root {
            vertices += 1;
            marks += g.genus_mark(v);
        }
    }
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, e)| {
            *i != edge
                && super::find(&mut parent, e.u) == root
                && super::find(&mut parent, e.v) == root
        })
        .count();
    (edges + 1 - vertices) as u32 + marks
}

/// Length decomposition of the graph by edge type.
fn delta_parts(g: &PolarizedMetrizedGraph) -> Vec<Rat> {
    let genus = g.genus();
    let mut parts = vec![Rat::zero(); genus as usize / 2 + 1];
    for (i, e) in g.edges().iter().enumerate() {
        let slot = if g.is_bridge(i) {
            let h = side_genus(g, i, e.u);
            h.min(genus - h) as usize
        } else {
            0
        };
        parts[slot] += &e.length;
    }
    parts
}

/// Computes every invariant. Requires positive genus and an effective
/// canonical divisor.
pub fn invariants(g: &PolarizedMetrizedGraph) -> Result<InvariantReport, Error> {
    let ps = PolarizedSystem::build(g)?;
    let genus = ps.genus;
    let two_g = rat_i(2 * i64::from(genus));
    let delta = g.total_length();
    let tau = ps.sys.tau();
    let alpha = &delta / rat_i(8) - &tau / rat_i(2);

    // Green diagonal against delta_K and against mu_a; the canonical
    // divisor lives on the base vertices (split midpoints carry K = 0)
    let base = &ps.sys.base;
    let diag_k: Rat = (0..base.vertex_count())
        .map(|v| rat_i(base.canonical_divisor(v)) * (&ps.theta[v] - &ps.capacity))
        .sum();
    let diag_a = &ps.capacity;

    let epsilon = (&two_g - rat_i(2)) * diag_a + &diag_k;
    let phi = -&delta / rat_i(4)
        + ((rat_i(10) * &two_g / rat_i(2) + rat_i(2)) * diag_a - diag_k) / rat_i(4);

    Ok(InvariantReport {
        genus,
        delta_parts: delta_parts(g),
        delta,
        tau,
        epsilon,
        phi,
        alpha,
    })
}
