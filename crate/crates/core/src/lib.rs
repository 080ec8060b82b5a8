//! Exact-rational engines for two closely related computations:
//!
//! * [`calculus`]: the loop-labelled-graph contraction calculus that
//!   expresses the Neron-Tate height of a tautological cycle `Z_{m,α}`
//!   on a jacobian through three universal rational coefficients
//!   `(a, b, c)` depending only on the multiplier tuple `m` and the
//!   genus `g`.
//! * [`pmgraph`]: effective resistance, canonical and admissible
//!   measures, the Green's function and the invariants δ, τ, ε, φ,
//!   δ_i and α of polarized metrized graphs.
//!
//! All arithmetic is arbitrary-precision rational; no floating point
//! appears anywhere. The [`verify`] module assembles the closed-form
//! identities relating the two engines into executable exact-equality
//! suites.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the
//! command line live in the companion `heightcalc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod calculus;
pub mod error;
pub mod pmgraph;
pub mod ratio;
pub mod verify;

pub use error::Error;
pub use ratio::Rat;
