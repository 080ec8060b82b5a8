//! From expansion to universal height coefficients.

use super::{evaluate, evaluate_geometric, expand_with, GeneratorSystem, IntersectionVector};
use crate::error::Error;
use crate::ratio::{rat_i, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Universal coefficients `(a, b, c)` of the identity
/// `h'_L(Z_{m,α}) = (1/[k:ℚ])(a·W + b·Φ) + c·h'_L(x_α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightCoefficients {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    /// Geometric self-intersection degree `G = 2^r · deg(f) · deg_L(Z)`.
    pub geometric_degree: BigInt,
    /// The raw arithmetic intersection vector `N` over `(W, Φ, B)`.
    pub arithmetic_vector: IntersectionVector,
}

/// `N = Σ coefficient · value` over the `(r+1)`-fold expansion; exact and
/// order-independent.
pub fn arithmetic_intersection(system: &GeneratorSystem) -> Result<IntersectionVector, Error> {
    let g = system.genus();
    let mut acc = IntersectionVector::zero();
    let mut failure: Option<Error> = None;
    expand_with(system, system.rank() + 1, |graph, coeff| {
        if failure.is_some() {
            return;
        }
        match evaluate(graph, g) {
            Ok(v) => acc += v.scaled_int(coeff),
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}

/// Geometric self-intersection of the class on `X^r`: the same expansion
/// with `n = r` and scalar evaluation. Always strictly positive.
pub fn geometric_degree(system: &GeneratorSystem) -> Result<BigInt, Error> {
    let g = system.genus();
    let mut acc = BigInt::zero();
    let mut failure: Option<Error> = None;
    expand_with(system, system.rank(), |graph, coeff| {
        if failure.is_some() {
            return;
        }
        match evaluate_geometric(graph, g) {
            Ok(v) => acc += v * coeff,
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if !acc.is_positive() {
        return Err(Error::Defect(
            "geometric degree not positive, contradicting generic finiteness".into(),
        ));
    }
    Ok(acc)
}

/// Computes `(a, b, c)` from `m` and `g`.
///
/// With `N = (w, p, b_B)` over `(W, Φ, B)` and `G` the geometric degree:
/// the height identity reads `h' = N / (2(r+1)·G·[k:ℚ])`, and the point
/// height of `x_α` eliminates `B` via
/// `B = 2(2g−2)[k:ℚ]·h'(x_α) + W/(2g−2)`.
pub fn height_coefficients(m: &[i64], g: u32) -> Result<HeightCoefficients, Error> {
    let system = GeneratorSystem::new(m, g)?;
    let n = arithmetic_intersection(&system)?;
    let gd = geometric_degree(&system)?;
    let r = system.rank();
    let two_g_minus_2 = rat_i(2 * i64::from(g) - 2);
    let norm = rat_i(2 * (r as i64 + 1)) * Rat::from_integer(gd.clone());
    let a = (&n.w + &n.b / &two_g_minus_2) / &norm;
    let b = &n.p / &norm;
    let c = &two_g_minus_2 * &n.b
        / (rat_i(r as i64 + 1) * Rat::from_integer(gd.clone()));
    Ok(HeightCoefficients { a, b, c, geometric_degree: gd, arithmetic_vector: n })
}
