//! Exact arithmetic for restricted partition numbers (denumerants) and their
//! Sylvester-wave quasi-polynomial representation.
//!
//! The denumerant `W(s, d^m)` counts nonnegative integer solutions of
//! `d_1 x_1 + ... + d_m x_m = s`. For every exponent tuple it agrees with a
//! quasi-polynomial: a polynomial in `s` whose coefficients are periodic
//! functions with periods `lcm(d_1..d_j)`. This crate computes
//!
//! * exact counts by big-integer dynamic programming ([`dp`]),
//! * the quasi-polynomial by two independent constructions
//!   (per-residue interpolation and a Bernoulli-polynomial recursion,
//!   [`quasipoly`]),
//! * the wave formulas for all irreducible Coxeter groups ([`coxeter`]),
//! * exact `lcm(1..N)` and its Chebyshev-theta growth ([`lcm_growth`]).
//!
//! All coefficient arithmetic is rational and exact; floating point appears
//! only in the lcm growth statistics and in test fixtures.

pub mod coxeter;
pub mod dp;
pub mod error;
pub mod exponents;
pub mod lcm_growth;
pub mod quasipoly;
pub mod rational;

pub use error::Error;
pub use exponents::{CoxeterGroup, ExponentTuple, HalfInteger};
pub use quasipoly::{QuasiPolynomial, Space};
pub use rational::Rational;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
