//! Loop-labelled-graph contraction calculus.
//!
//! The `(r+1)`-fold self-product of the class
//! `Σ m_i² ω̂_i − 2 Σ m_i m_j Δ̂_ij + d Σ m_i β̂_i` expands into a sum over
//! multisets of generators; each multiset is a loop-labelled graph on the
//! fixed vertex set `{1..r}`, which the contraction rules reduce to a
//! handful of minimal shapes with known intersection values. Summing the
//! contributions and dividing by the geometric degree of the class yields
//! the universal height coefficients `(a, b, c)`.

mod evaluate;
mod expand;
mod graph;
mod heights;

pub use evaluate::{evaluate, evaluate_geometric, IntersectionVector};
pub use expand::{expand, expand_with, multiset_count};
pub use graph::{Contraction, LoopBase, LoopLabel, LoopLabelledGraph};
pub use heights::{
    arithmetic_intersection, geometric_degree, height_coefficients, HeightCoefficients,
};

use crate::error::Error;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

/// Hard cap on the tuple length: `r = 8` would already mean
/// `C(52, 9) ≈ 3.7e9` expansion terms.
pub const MAX_RANK: usize = 7;

/// A factor of the expanded class, living on `X^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    /// `ω̂_i`, a loop at vertex `i`.
    Omega(u32),
    /// `Δ̂_ij` with `i < j`, an edge between `i` and `j`.
    Delta(u32, u32),
    /// `β̂_i`, a loop at vertex `i`.
    Beta(u32),
}

/// Weighted generator set `S(r)` determined by `(m, g)`.
#[derive(Debug, Clone)]
pub struct GeneratorSystem {
    genus: u32,
    rank: usize,
    m: Vec<i64>,
    d: i64,
    generators: Vec<(Generator, BigInt)>,
}

impl GeneratorSystem {
    /// The generator weights of the tautological class:
    /// `q(ω̂_i) = m_i²`, `q(Δ̂_ij) = −2 m_i m_j`, `q(β̂_i) = d·m_i`.
    /// Weight-zero generators are pruned before expansion.
    pub fn new(m: &[i64], g: u32) -> Result<Self, Error> {
        if g < 2 {
            return Err(Error::GenusTooSmall { genus: g });
        }
        if m.len() > MAX_RANK {
            return Err(Error::Capacity { rank: m.len() });
        }
        if m.len() as u32 > g {
            return Err(Error::RankExceedsGenus { rank: m.len(), genus: g });
        }
        if let Some(index) = m.iter().position(|&mi| mi == 0) {
            return Err(Error::ZeroMultiplier { index });
        }
        let d: i64 = m.iter().sum();
        let r = m.len();
        let mut generators = Vec::with_capacity(r * (r + 3) / 2);
        for (i, &mi) in m.iter().enumerate() {
            let w = BigInt::from(mi) * BigInt::from(mi);
            generators.push((Generator::Omega(i as u32 + 1), w));
        }
        for (i, &mi) in m.iter().enumerate() {
            for (j, &mj) in m.iter().enumerate().skip(i + 1) {
                let w = BigInt::from(-2) * BigInt::from(mi) * BigInt::from(mj);
                generators.push((Generator::Delta(i as u32 + 1, j as u32 + 1), w));
            }
        }
        for (i, &mi) in m.iter().enumerate() {
            let w = BigInt::from(d) * BigInt::from(mi);
            generators.push((Generator::Beta(i as u32 + 1), w));
        }
        generators.retain(|(_, w)| !w.is_zero());
        Ok(GeneratorSystem { genus: g, rank: r, m: m.to_vec(), d, generators })
    }

    /// A system with explicitly chosen weights, for expansions that do not
    /// come from a multiplier tuple (e.g. `(Σ ω̂_i − Σ Δ̂_ij)^g`).
    pub fn custom(
        rank: usize,
        g: u32,
        generators: Vec<(Generator, BigInt)>,
    ) -> Result<Self, Error> {
        if g < 2 {
            return Err(Error::GenusTooSmall { genus: g });
        }
        if rank > MAX_RANK {
            return Err(Error::Capacity { rank });
        }
        let mut generators = generators;
        generators.retain(|(_, w)| !w.is_zero());
        Ok(GeneratorSystem { genus: g, rank, m: Vec::new(), d: 0, generators })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn multipliers(&self) -> &[i64] {
        &self.m
    }

    /// `d = Σ m_i`.
    pub fn degree_sum(&self) -> i64 {
        self.d
    }

    pub fn generators(&self) -> &[(Generator, BigInt)] {
        &self.generators
    }
}

/// Same as [`GeneratorSystem::new`]; the free-function spelling used
/// throughout the tests.
pub fn generator_system(m: &[i64], g: u32) -> Result<GeneratorSystem, Error> {
    GeneratorSystem::new(m, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weight_of(sys: &GeneratorSystem, gen: Generator) -> Option<BigInt> {
        sys.generators().iter().find(|(h, _)| *h == gen).map(|(_, w)| w.clone())
    }

    #[test]
    fn single_multiplier() {
        let s = generator_system(&[1], 3).unwrap();
        assert_eq!(s.degree_sum(), 1);
        assert_eq!(weight_of(&s, Generator::Omega(1)), Some(BigInt::from(1)));
        assert_eq!(weight_of(&s, Generator::Beta(1)), Some(BigInt::from(1)));
        assert_eq!(s.generators().len(), 2);
    }

    #[test]
    fn zero_degree_prunes_beta() {
        let s = generator_system(&[1, -1], 5).unwrap();
        assert_eq!(s.degree_sum(), 0);
        assert_eq!(weight_of(&s, Generator::Omega(1)), Some(BigInt::from(1)));
        assert_eq!(weight_of(&s, Generator::Omega(2)), Some(BigInt::from(1)));
        assert_eq!(weight_of(&s, Generator::Delta(1, 2)), Some(BigInt::from(2)));
        assert_eq!(weight_of(&s, Generator::Beta(1)), None);
        assert_eq!(weight_of(&s, Generator::Beta(2)), None);
    }

    #[test]
    fn general_weights() {
        let s = generator_system(&[2, 3], 4).unwrap();
        assert_eq!(s.degree_sum(), 5);
        assert_eq!(weight_of(&s, Generator::Omega(1)), Some(BigInt::from(4)));
        assert_eq!(weight_of(&s, Generator::Omega(2)), Some(BigInt::from(9)));
        assert_eq!(weight_of(&s, Generator::Delta(1, 2)), Some(BigInt::from(-12)));
        assert_eq!(weight_of(&s, Generator::Beta(1)), Some(BigInt::from(10)));
        assert_eq!(weight_of(&s, Generator::Beta(2)), Some(BigInt::from(15)));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            generator_system(&[1, 0], 4).unwrap_err(),
            Error::ZeroMultiplier { index: 1 }
        );
        assert_eq!(
            generator_system(&[1, 1, 1], 2).unwrap_err(),
            Error::RankExceedsGenus { rank: 3, genus: 2 }
        );
        assert_eq!(generator_system(&[1], 1).unwrap_err(), Error::GenusTooSmall { genus: 1 });
        assert_eq!(
            generator_system(&[1; 8], 10).unwrap_err(),
            Error::Capacity { rank: 8 }
        );
    }

    #[test]
    fn empty_tuple_is_legal() {
        let s = generator_system(&[], 3).unwrap();
        assert_eq!(s.rank(), 0);
        assert!(s.generators().is_empty());
    }
}
