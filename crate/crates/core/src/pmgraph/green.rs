//! Exact integration of the resistance and Green's functions.
//!
//! Everything reduces to evaluating `r(x, y)` at mesh nodes, where the
//! mesh refines the graph with a node at every edge midpoint. Restricted
//! to an edge (with the other argument held at a node off that edge's
//! interior), `r` is a quadratic polynomial in arclength, so three-point
//! Simpson quadrature through the mesh nodes is exact; the only
//! non-polynomial cases, both arguments on one edge, have closed forms.

use super::measure::{admissible_measure, canonical_measure, Measure};
use super::resistance::resistance_matrix;
use super::{Point, PolarizedMetrizedGraph};
use crate::error::{Error, GraphError};
use crate::ratio::{rat_i, Rat};
use alloc::vec::Vec;
use num_traits::Zero;

/// Mesh-backed evaluator over a self-loop free graph.
pub(crate) struct System {
    pub base: PolarizedMetrizedGraph,
    /// mesh node sitting at the midpoint of each base edge
    pub midpoint: Vec<usize>,
    /// pairwise resistance between mesh nodes
    pub resist: Vec<Vec<Rat>>,
    /// per base edge: `L = l + R_e` with `R_e` the resistance of the rest
    /// of the network between the endpoints; `None` on bridges (`L`
    /// infinite). Two points on the edge at arc distance `d` have
    /// resistance `d (L - d) / L`.
    pub ext: Vec<Option<Rat>>,
    pub mu_can: Measure,
}

impl System {
    /// `g` must be connected; self-loops are split by the caller.
    pub fn build(g: &PolarizedMetrizedGraph) -> System {
        let (base, _) = g.split_self_loops();
        let ne = base.edges().len();
        let mut mesh = base.clone();
        let mut midpoint = Vec::with_capacity(ne);
        for i in 0..ne {
            let half = &mesh.edges()[i].length / rat_i(2);
            mesh = mesh.subdivide(i, &half).expect("midpoint is interior");
            midpoint.push(base.vertex_count() + i);
        }
        let resist = resistance_matrix(&mesh);
        let ext = base
            .edges()
            .iter()
            .map(|e| {
                let r = &resist[e.u][e.v];
                if *r == e.length {
                    None
                } else {
                    Some(&e.length * &e.length / (&e.length - r))
                }
            })
            .collect();
        let mu_can = canonical_measure(&base);
        System {
            base,
            midpoint,
            resist,
            ext,
            mu_can,
        }
    }

    /// `int_e r(x, .)` for a mesh node `x`.
    pub fn edge_integral(&self, e: usize, x: usize) -> Rat {
        let edge = &self.base.edges()[e];
        let l = &edge.length;
        if x == self.midpoint[e] {
            // both arguments on e; integrate d(L-d)/L in the distance to
            // the midpoint, which is l^2/4 - l^3/(12 L)
            let quarter = l * l / rat_i(4);
            return match &self.ext[e] {
                Some(big_l) => quarter - l * l * l / (rat_i(12) * big_l),
                None => quarter,
            };
        }
        let simpson = &self.resist[x][edge.u]
            + rat_i(4) * &self.resist[x][self.midpoint[e]]
            + &self.resist[x][edge.v];
        l / rat_i(6) * simpson
    }

    /// `int r(x, .) d(mu)` for a mesh node `x` and a measure on the base
    /// edges.
    pub fn integral_against(&self, mu: &Measure, x: usize) -> Rat {
        let vertex: Rat = mu
            .vertex_mass
            .iter()
            .enumerate()
            .map(|(v, m)| m * &self.resist[x][v])
            .sum();
        let edge: Rat = mu
            .edge_density
            .iter()
            .enumerate()
            .map(|(e, rho)| rho * self.edge_integral(e, x))
            .sum();
        vertex + edge
    }

    /// `int int_{e x f} r(x, y) dx dy`.
    pub fn double_edge_integral(&self, e: usize, f: usize) -> Rat {
        let l = &self.base.edges()[e].length;
        if e == f {
            return match &self.ext[e] {
                Some(big_l) => {
                    l * l * l * (rat_i(2) * big_l - l) / (rat_i(6) * big_l)
                }
                None => l * l * l / rat_i(3),
            };
        }
        let fe = &self.base.edges()[f];
        let simpson = self.edge_integral(e, fe.u)
            + rat_i(4) * self.edge_integral(e, self.midpoint[f])
            + self.edge_integral(e, fe.v);
        &fe.length / rat_i(6) * simpson
    }

    /// `int int r d(mu) d(nu)` over the whole graph.
    pub fn double_integral(&self, mu: &Measure, nu: &Measure) -> Rat {
        let n = self.base.vertex_count();
        let ne = self.base.edges().len();
        let mut total = Rat::zero();
        for a in 0..n {
            if mu.vertex_mass[a].is_zero() {
                continue;
            }
            for b in 0..n {
                total += &mu.vertex_mass[a] * &nu.vertex_mass[b] * &self.resist[a][b];
            }
        }
        for e in 0..ne {
            for b in 0..n {
                if nu.vertex_mass[b].is_zero() {
                    continue;
                }
                total += &mu.edge_density[e] * &nu.vertex_mass[b] * self.edge_integral(e, b);
            }
            for f in 0..ne {
                total +=
                    &mu.edge_density[e] * &nu.edge_density[f] * self.double_edge_integral(e, f);
            }
            for a in 0..n {
                if mu.vertex_mass[a].is_zero() {
                    continue;
                }
                total += &mu.vertex_mass[a] * &nu.edge_density[e] * self.edge_integral(e, a);
            }
        }
        total
    }

    /// Tau invariant, independent of the base point.
    pub fn tau(&self) -> Rat {
        self.integral_against(&self.mu_can, 0) / rat_i(2)
    }
}

/// Polarized system: the admissible measure, theta potential and
/// capacity on top of the resistance mesh.
pub(crate) struct PolarizedSystem {
    pub sys: System,
    /// kept for inspection in tests; the engine consumes theta and capacity
    #[allow(dead_code)]
    pub mu_a: Measure,
    /// `theta(v) = int r(v, .) d(mu_a)` at the base vertices
    pub theta: Vec<Rat>,
    /// `C = (1/2) int int r d(mu_a) d(mu_a) = int g(x,x) d(mu_a)`
    pub capacity: Rat,
    pub genus: u32,
}

impl PolarizedSystem {
    pub fn build(g: &PolarizedMetrizedGraph) -> Result<PolarizedSystem, Error> {
        // validate on the caller's graph so error indices match it
        admissible_measure(g)?;
        let sys = System::build(g);
        let mu_a = admissible_measure(&sys.base).expect("splitting preserves polarization");
        let theta: Vec<Rat> = (0..sys.base.vertex_count())
            .map(|v| sys.integral_against(&mu_a, v))
            .collect();
        let capacity = sys.double_integral(&mu_a, &mu_a) / rat_i(2);
        // independent route to the capacity: Simpson over theta, which is
        // quadratic on every edge
        let theta_route = {
            let vertex: Rat = mu_a
                .vertex_mass
                .iter()
                .zip(&theta)
                .map(|(m, t)| m * t)
                .sum();
            let edge: Rat = (0..sys.base.edges().len())
                .map(|e| {
                    let ed = &sys.base.edges()[e];
                    let mid = sys.integral_against(&mu_a, sys.midpoint[e]);
                    let simpson = &theta[ed.u] + rat_i(4) * mid + &theta[ed.v];
                    &mu_a.edge_density[e] * &ed.length / rat_i(6) * simpson
                })
                .sum();
            (vertex + edge) / rat_i(2)
        };
        if theta_route != capacity {
            return Err(Error::Defect(alloc::format!(
                "capacity mismatch: {} vs {}",
                crate::ratio::format_rat(&capacity),
                crate::ratio::format_rat(&theta_route)
            )));
        }
        let genus = sys.base.genus();
        Ok(PolarizedSystem {
            sys,
            mu_a,
            theta,
            capacity,
            genus,
        })
    }

    /// `g(u, v)` at base vertices.
    pub fn green_vertices(&self, u: usize, v: usize) -> Rat {
        (&self.theta[u] + &self.theta[v] - &self.sys.resist[u][v]) / rat_i(2) - &self.capacity
    }
}

fn locate(g: &PolarizedMetrizedGraph, points: &[Point]) -> Result<(PolarizedMetrizedGraph, Vec<usize>), GraphError> {
    for p in points {
        if let Point::On { edge, t } = p {
            let e = g.edges().get(*edge).ok_or(GraphError::EdgeOutOfRange { edge: *edge })?;
            if t < &Rat::zero() || t > &e.length {
                return Err(GraphError::SubdivisionOutOfRange);
            }
        }
    }
    g.with_vertices_at(points)
}

/// Effective resistance between two points of the metric graph.
pub fn point_resistance(g: &PolarizedMetrizedGraph, p: &Point, q: &Point) -> Result<Rat, GraphError> {
    let pts = [p.clone(), q.clone()];
    let (h, ids) = locate(g, &pts)?;
    let r = super::resistance::vertex_resistance(&h);
    Ok(r[ids[0]][ids[1]].clone())
}

/// `theta(p) = int r(p, .) d(mu_a)`.
pub fn theta(g: &PolarizedMetrizedGraph, p: &Point) -> Result<Rat, Error> {
    let (h, ids) = locate(g, core::slice::from_ref(p))?;
    let ps = PolarizedSystem::build(&h)?;
    Ok(ps.theta[ids[0]].clone())
}

/// Green's function `g(p, q)` for the admissible measure.
pub fn green_value(g: &PolarizedMetrizedGraph, p: &Point, q: &Point) -> Result<Rat, Error> {
    let pts = [p.clone(), q.clone()];
    let (h, ids) = locate(g, &pts)?;
    let ps = PolarizedSystem::build(&h)?;
    Ok(ps.green_vertices(ids[0], ids[1]))
}

/// `g(p, p) = theta(p) - C`.
pub fn green_diagonal(g: &PolarizedMetrizedGraph, p: &Point) -> Result<Rat, Error> {
    let (h, ids) = locate(g, core::slice::from_ref(p))?;
    let ps = PolarizedSystem::build(&h)?;
    Ok(&ps.theta[ids[0]] - &ps.capacity)
}
