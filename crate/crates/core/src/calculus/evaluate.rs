//! Evaluation of reduced loop-labelled graphs.

use super::graph::{LoopBase, LoopLabel, LoopLabelledGraph};
use crate::error::Error;
use crate::ratio::Rat;
use alloc::format;
use core::ops::{Add, AddAssign};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rational vector `w·W + p·Φ + b·B` over the basis
/// `W = ⟨ω̂,ω̂⟩`, `Φ = Σ_v φ(X_v) log Nv`, `B = ⟨β̂,ω̂⟩`.
///
/// The theta-graph value `T = ⟨Δ̂,Δ̂,Δ̂⟩` is stored expanded as
/// `(1, −1, 0)`; `⟨β̂,β̂⟩ = 0` is never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionVector {
    pub w: Rat,
    pub p: Rat,
    pub b: Rat,
}

impl IntersectionVector {
    pub fn zero() -> Self {
        IntersectionVector { w: Rat::zero(), p: Rat::zero(), b: Rat::zero() }
    }

    pub fn new(w: Rat, p: Rat, b: Rat) -> Self {
        IntersectionVector { w, p, b }
    }

    pub fn from_ints(w: i64, p: i64, b: i64) -> Self {
        IntersectionVector {
            w: Rat::from_integer(w.into()),
            p: Rat::from_integer(p.into()),
            b: Rat::from_integer(b.into()),
        }
    }

    /// The theta graph: `T = W − Φ`.
    pub fn theta() -> Self {
        IntersectionVector::from_ints(1, -1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.p.is_zero() && self.b.is_zero()
    }

    pub fn scaled_int(&self, k: &BigInt) -> Self {
        let k = Rat::from_integer(k.clone());
        self.scaled(&k)
    }

    pub fn scaled(&self, k: &Rat) -> Self {
        IntersectionVector { w: &self.w * k, p: &self.p * k, b: &self.b * k }
    }
}

impl Add for IntersectionVector {
    type Output = IntersectionVector;
    fn add(self, rhs: IntersectionVector) -> IntersectionVector {
        IntersectionVector { w: self.w + rhs.w, p: self.p + rhs.p, b: self.b + rhs.b }
    }
}

impl AddAssign for IntersectionVector {
    fn add_assign(&mut self, rhs: IntersectionVector) {
        self.w += rhs.w;
        self.p += rhs.p;
        self.b += rhs.b;
    }
}

/// `⟨σ̂,τ̂⟩` for loop labels, with signs multiplied through.
fn pairing(s: LoopLabel, t: LoopLabel) -> IntersectionVector {
    let sign = s.sign() * t.sign();
    let base = match (s.base, t.base) {
        (LoopBase::Omega, LoopBase::Omega) => IntersectionVector::from_ints(1, 0, 0),
        (LoopBase::Omega, LoopBase::Beta) | (LoopBase::Beta, LoopBase::Omega) => {
            IntersectionVector::from_ints(0, 0, 1)
        }
        (LoopBase::Beta, LoopBase::Beta) => IntersectionVector::zero(),
    };
    base.scaled_int(&BigInt::from(sign))
}

/// Value of a minimal connected component with `χ = −1`; the minimal-shape
/// classification says it is a dumbbell, a figure-eight or a theta graph.
fn minimal_value(c: &LoopLabelledGraph) -> Result<IntersectionVector, Error> {
    let (nv, nl, ne) = (c.vertex_count(), c.loops().len(), c.edges().len());
    match (nv, nl, ne) {
        // figure-eight: one vertex, two loops
        (1, 2, 0) => Ok(pairing(c.loops()[0].1, c.loops()[1].1)),
        // dumbbell: two vertices with a loop each, joined by one edge
        (2, 2, 1) if c.loops()[0].0 != c.loops()[1].0 => {
            Ok(pairing(c.loops()[0].1, c.loops()[1].1))
        }
        // theta: two vertices joined by three parallel edges
        (2, 0, 3) => Ok(IntersectionVector::theta()),
        _ => Err(Error::Defect(format!(
            "minimal chi = -1 component with {nv} vertices, {nl} loops, {ne} edges \
             is none of dumbbell / figure-eight / theta"
        ))),
    }
}

/// Scalar value of a minimal `χ = 0` component (one vertex, one loop).
fn minimal_scalar(c: &LoopLabelledGraph, g: u32) -> Result<i64, Error> {
    if c.vertex_count() == 1 && c.loops().len() == 1 && c.edges().is_empty() {
        Ok(c.loops()[0].1.degree(g))
    } else {
        Err(Error::Defect(format!(
            "minimal chi = 0 component with {} vertices not a single labelled loop",
            c.vertex_count()
        )))
    }
}

/// Intersection value of a loop-labelled graph arising from an expansion
/// with total `χ = −1` (arithmetic mode).
///
/// Returns zero whenever some component is a tree (`χ = 1`); otherwise
/// exactly one component has `χ = −1` and contributes a vector while every
/// `χ = 0` component contributes its loop degree as a scalar factor.
pub fn evaluate(graph: &LoopLabelledGraph, g: u32) -> Result<IntersectionVector, Error> {
    let components = graph.components();
    // A tree component is contractible to a point and kills the product;
    // it is also what absorbs the excess chi of any chi <= -2 component.
    if components.iter().any(|c| c.euler_characteristic() == 1) {
        return Ok(IntersectionVector::zero());
    }
    let mut scalar = BigInt::one();
    let mut vector: Option<IntersectionVector> = None;
    for comp in components {
        match comp.euler_characteristic() {
            1 => unreachable!(),
            0 => scalar *= minimal_scalar(&comp.reduce(), g)?,
            -1 => {
                let v = minimal_value(&comp.reduce())?;
                if vector.replace(v).is_some() {
                    return Err(Error::Defect(
                        "two chi = -1 components in arithmetic mode".into(),
                    ));
                }
            }
            chi => {
                return Err(Error::Defect(format!(
                    "component with chi = {chi} in arithmetic mode"
                )))
            }
        }
    }
    match vector {
        Some(v) => Ok(v.scaled_int(&scalar)),
        None => Err(Error::Defect("no chi = -1 component in arithmetic mode".into())),
    }
}

/// Scalar value of a graph in geometric mode (`n = r` edges): nonzero only
/// if every component has `χ = 0`, in which case it is the product of the
/// loop degrees of the reduced components. The empty graph evaluates to 1.
pub fn evaluate_geometric(graph: &LoopLabelledGraph, g: u32) -> Result<BigInt, Error> {
    let mut scalar = BigInt::one();
    for comp in graph.components() {
        if comp.euler_characteristic() != 0 {
            return Ok(BigInt::zero());
        }
        scalar *= minimal_scalar(&comp.reduce(), g)?;
    }
    Ok(scalar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_graph() -> LoopLabelledGraph {
        let mut g = LoopLabelledGraph::new([1, 2]);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        g.add_edge(1, 2);
        g
    }

    #[test]
    fn theta_value() {
        assert_eq!(
            evaluate(&theta_graph(), 5).unwrap(),
            IntersectionVector::from_ints(1, -1, 0)
        );
    }

    #[test]
    fn figure_eight_omega_beta() {
        let mut g = LoopLabelledGraph::new([1]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(1, LoopLabel::BETA);
        assert_eq!(evaluate(&g, 4).unwrap(), IntersectionVector::from_ints(0, 0, 1));
    }

    #[test]
    fn multiplicative_scalar_factor() {
        // dumbbell(ω,ω) ⊔ isolated β-loop vertex → 2·(1,0,0)
        let mut g = LoopLabelledGraph::new([1, 2, 3]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(2, LoopLabel::OMEGA);
        g.add_edge(1, 2);
        g.add_loop(3, LoopLabel::BETA);
        assert_eq!(evaluate(&g, 7).unwrap(), IntersectionVector::from_ints(2, 0, 0));
    }

    #[test]
    fn bare_vertex_kills_everything() {
        let mut g = LoopLabelledGraph::new([1, 2, 3]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(2, LoopLabel::BETA);
        // vertex 3 is an isolated tree component
        assert!(evaluate(&g, 3).unwrap().is_zero());
    }

    #[test]
    fn negative_loop_signs() {
        let mut g = LoopLabelledGraph::new([1]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(1, LoopLabel::OMEGA_NEG);
        assert_eq!(evaluate(&g, 3).unwrap(), IntersectionVector::from_ints(-1, 0, 0));
    }

    #[test]
    fn geometric_mode() {
        // loop ω at 1, loop β at 2 → (2g−2)·2
        let mut g = LoopLabelledGraph::new([1, 2]);
        g.add_loop(1, LoopLabel::OMEGA);
        g.add_loop(2, LoopLabel::BETA);
        assert_eq!(evaluate_geometric(&g, 4).unwrap(), BigInt::from(12));
        // empty graph → 1
        let empty = LoopLabelledGraph::new([]);
        assert_eq!(evaluate_geometric(&empty, 4).unwrap(), BigInt::one());
        // a tree edge → 0
        let mut t = LoopLabelledGraph::new([1, 2]);
        t.add_edge(1, 2);
        assert_eq!(evaluate_geometric(&t, 4).unwrap(), BigInt::zero());
    }
}
