//! Exact scalar and commutative-polynomial arithmetic.
//!
//! [`Rational`] is the only scalar. [`UPoly`] carries the interpolation
//! parameter `u`; [`DPoly`] carries the dilatation variables of up to three
//! tensor legs with `UPoly` coefficients, keeping `u`-degree and `D`-degree
//! independent.

mod dpoly;
mod rational;
mod upoly;

pub use dpoly::{binom_poly, DPoly, Exponents, VARIABLE_NAMES};
pub use rational::Rational;
pub use upoly::UPoly;
