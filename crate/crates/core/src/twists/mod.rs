//! Twist constructors and the verification checks built on them.

mod build;
mod checks;
mod report;
mod spec;
mod targets;

pub use build::{
    build_twist, closed_l, closed_r_direct, closed_r_inverse, cochain_l, cochain_r, cochain_twist,
    cochain_v, f0, f0_inverse, f1, f1_inverse, jordanian_exponent, v_family,
};
pub use checks::{
    check_cocycle, check_cocycle_element, check_deformed_counit, check_endpoints,
    check_form_equality, check_hopf_data, check_inverse_pair, check_lr_at_one, check_lr_relation,
    check_normalization, check_normalization_element, check_twisted_coassociativity,
    check_v_family, cocycle_order_terms, cocycle_sides, inverse_cocycle_sides,
};
pub use report::{Failure, GradeResult, Status, SubCheck, VerificationReport};
pub use spec::{Direction, Family, Form, TwistSpec, UMode};
pub use targets::{build_target, Generator, Target};
