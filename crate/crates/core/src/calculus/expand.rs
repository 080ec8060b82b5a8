//! Multinomial expansion of a power of the generator sum.

use super::{Generator, GeneratorSystem, LoopLabel, LoopLabelledGraph};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

/// `n! / Π k_i!` for the multiset given by `counts` (with `Σ counts = n`).
fn multinomial(n: usize, counts: &[usize]) -> BigInt {
    let mut c = factorial(n);
    for &k in counts {
        if k > 1 {
            c /= factorial(k);
        }
    }
    c
}

fn materialize(system: &GeneratorSystem, counts: &[usize]) -> LoopLabelledGraph {
    let mut g = LoopLabelledGraph::new(1..=system.rank() as u32);
    for (&count, (gen, _)) in counts.iter().zip(system.generators()) {
        for _ in 0..count {
            match *gen {
                Generator::Omega(i) => g.add_loop(i, LoopLabel::OMEGA),
                Generator::Beta(i) => g.add_loop(i, LoopLabel::BETA),
                Generator::Delta(i, j) => g.add_edge(i, j),
            }
        }
    }
    g
}

/// Enumerates every size-`n` multiset of generators, calling the visitor
/// with the materialized loop-labelled graph on vertices `{1..r}` and the
/// exact coefficient `(n!/Πk_s!)·Π q(s)^{k_s}`.
pub fn expand_with<F>(system: &GeneratorSystem, n: usize, mut visit: F)
where
    F: FnMut(&LoopLabelledGraph, &BigInt),
{
    let gens = system.generators();
    let mut counts = vec![0usize; gens.len()];
    // n = 0 contributes the empty graph with coefficient 1, even for an
    // empty generator list.
    fn recurse<F: FnMut(&LoopLabelledGraph, &BigInt)>(
        system: &GeneratorSystem,
        counts: &mut Vec<usize>,
        idx: usize,
        remaining: usize,
        visit: &mut F,
    ) {
        if remaining == 0 || idx == counts.len() {
            if remaining != 0 {
                return;
            }
            let n: usize = counts.iter().sum();
            let mut coeff = multinomial(n, counts);
            for (&k, (_, w)) in counts.iter().zip(system.generators()) {
                for _ in 0..k {
                    coeff *= w;
                }
            }
            let graph = materialize(system, counts);
            visit(&graph, &coeff);
            return;
        }
        for k in (0..=remaining).rev() {
            counts[idx] = k;
            recurse(system, counts, idx + 1, remaining - k, visit);
        }
        counts[idx] = 0;
    }
    recurse(system, &mut counts, 0, n, &mut visit);
}

/// Collects the expansion into a vector; test and small-rank convenience.
pub fn expand(system: &GeneratorSystem, n: usize) -> Vec<(LoopLabelledGraph, BigInt)> {
    let mut out = Vec::new();
    expand_with(system, n, |g, c| out.push((g.clone(), c.clone())));
    out
}

/// Number of size-`n` multisets over `k` generators: `C(k+n-1, n)`.
pub fn multiset_count(k: usize, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut c = BigInt::one();
    for i in 0..n {
        c *= BigInt::from(k + n - 1 - i);
    }
    c / factorial(n)
}

#[cfg(test)]
mod tests {
    use super::super::generator_system;
    use super::*;

    #[test]
    fn binomial_case() {
        // m=(1): two generators of weight 1; squaring gives 1, 2, 1.
        let sys = generator_system(&[1], 3).unwrap();
        let terms = expand(&sys, 2);
        assert_eq!(terms.len(), 3);
        let coeffs: Vec<BigInt> = terms.iter().map(|(_, c)| c.clone()).collect();
        let mut sorted = coeffs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn pure_diagonal_cube_coefficient() {
        // m=(1,-1): the Δ·Δ·Δ term carries weight(Δ)^3 = 8.
        let sys = generator_system(&[1, -1], 3).unwrap();
        let terms = expand(&sys, 3);
        let theta = terms
            .iter()
            .find(|(g, _)| g.edges().len() == 3)
            .expect("pure diagonal term");
        assert_eq!(theta.1, BigInt::from(8));
    }

    #[test]
    fn stars_and_bars_count() {
        // r=2 with all five weights nonzero, n=3: C(7,3) = 35 multisets.
        let sys = generator_system(&[2, 3], 4).unwrap();
        assert_eq!(sys.generators().len(), 5);
        assert_eq!(expand(&sys, 3).len(), 35);
        assert_eq!(multiset_count(5, 3), BigInt::from(35));
    }

    #[test]
    fn empty_system_edges() {
        let sys = generator_system(&[], 3).unwrap();
        assert_eq!(expand(&sys, 1).len(), 0);
        let base = expand(&sys, 0);
        assert_eq!(base.len(), 1);
        assert_eq!(base[0].1, BigInt::one());
        assert_eq!(base[0].0.vertex_count(), 0);
    }
}
