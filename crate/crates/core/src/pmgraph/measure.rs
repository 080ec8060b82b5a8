//! Canonical and admissible measures.
//!
//! Both measures are piecewise uniform: point masses at the vertices plus
//! a constant density on each edge, so exact rational data suffices.

use super::resistance::resistance_matrix;
use super::PolarizedMetrizedGraph;
use crate::error::{Error, GraphError};
use crate::ratio::{rat, rat_i, Rat};
use alloc::vec::Vec;


/// Point masses at vertices plus a constant density per edge, indexed
/// like the graph it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    pub vertex_mass: Vec<Rat>,
    pub edge_density: Vec<Rat>,
}

impl Measure {
    pub fn total_mass(&self, g: &PolarizedMetrizedGraph) -> Rat {
        let vertex: Rat = self.vertex_mass.iter().cloned().sum();
        let edge: Rat = self
            .edge_density
            .iter()
            .zip(g.edges())
            .map(|(rho, e)| rho * &e.length)
            .sum();
        vertex + edge
    }
}

/// Canonical measure of total mass one: mass `1 - valence/2` at each
/// vertex, density `(l - r_uv) / l^2` on each edge of length `l` whose
/// endpoints have effective resistance `r_uv`, zero on bridges. A bridge
/// is detected exactly by `r_uv == l`.
pub fn canonical_measure(g: &PolarizedMetrizedGraph) -> Measure {
    let (split, origin) = g.split_self_loops();
    let resist = resistance_matrix(&split);
    let vertex_mass = (0..g.vertex_count())
        .map(|v| rat_i(1) - rat_i(g.valence(v) as i64) / rat_i(2))
        .collect();
    let mut edge_density = Vec::with_capacity(g.edges().len());
    for i in 0..g.edges().len() {
        // density is equal on both halves of a split self-loop, so any
        // representative split edge gives the original edge's density
        let k = origin.iter().position(|&o| o == i).unwrap();
        let se = &split.edges()[k];
        let r = &resist[se.u][se.v];
        edge_density.push((&se.length - r) / (&se.length * &se.length));
    }
    Measure {
        vertex_mass,
        edge_density,
    }
}

/// Admissible measure for the canonical divisor: `(K + 2 mu_can) / (2g)`,
/// which simplifies to mass `q(v)/g` at vertices and density
/// `rho_can / g` on edges. Requires positive genus and `K(v) >= 0`.
pub fn admissible_measure(g: &PolarizedMetrizedGraph) -> Result<Measure, Error> {
    let genus = g.genus();
    if genus == 0 {
        return Err(GraphError::GenusZero.into());
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.canonical_divisor(v) < 0) {
        return Err(GraphError::NegativeCanonicalDivisor { vertex: v }.into());
    }
    let can = canonical_measure(g);
    let gr = rat_i(i64::from(genus));
    Ok(Measure {
        vertex_mass: (0..g.vertex_count())
            .map(|v| rat(i64::from(g.genus_mark(v)), 1) / &gr)
            .collect(),
        edge_density: can.edge_density.into_iter().map(|d| d / &gr).collect(),
    })
}
