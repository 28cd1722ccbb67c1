//! Normal-ordered, κ-graded, truncated tensor powers of the Borel algebra
//! generated by `D`, `P` and the transverse probe `Q`, with
//! `[P, D] = P`, `[Q, D] = Q`, `[P, Q] = 0`.

mod element;
pub mod hopf;
mod monomial;
pub mod series;

pub use element::{Comparison, Difference, TensorElement};
pub use hopf::{
    antipode, conjugate, coproduct, counit, counit_contract, fold_mul_antipode, multiply_legs,
    twisted_antipode, Side,
};
pub use monomial::{LegMonomial, Monomial};
pub use series::{exp, inverse, log1p, series_apply};
