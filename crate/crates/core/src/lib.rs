//! Exact truncated-series engine for Jordanian twists on the Borel algebra
//! `[P, D] = P`.
//!
//! Elements of `U(b)^{⊗L}` are stored normal-ordered (momenta left, dilatation
//! polynomials right) and graded by the power of `1/κ`; every product drops
//! terms above the truncation order. On top of that sit the twist families,
//! their deformed Hopf data, and exact checkers for the combinatorial
//! identities behind the closed-form expansions.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod borel;
mod error;
pub mod exactalg;
pub mod identities;
pub mod twists;

pub use error::Error;

/// Largest supported number of tensor legs.
pub const MAX_LEGS: usize = 3;
