use jtwist_core::borel::{conjugate, counit_contract, TensorElement};
use jtwist_core::exactalg::{Rational, UPoly};
use jtwist_core::twists::{
    build_twist, check_cocycle, check_endpoints, f0, f0_inverse, f1, Direction, Family, Form,
    TwistSpec,
};

fn t(a: &TensorElement, b: &TensorElement) -> TensorElement {
    a.tensor(b).unwrap()
}

fn f_l(n: u32) -> TensorElement {
    build_twist(&TwistSpec::closed(Family::L, n)).unwrap()
}

fn f_l_inv(n: u32) -> TensorElement {
    build_twist(&TwistSpec::new(
        Family::L,
        Direction::Inverse,
        Form::InvertedClosed,
        n,
    ))
    .unwrap()
}

#[test]
fn grade_one_slice_of_f_l() {
    let n = 3;
    let (p, d) = (TensorElement::p(n), TensorElement::d(n));
    let expected = &t(&p, &d).scale(&(&UPoly::one() - &UPoly::u())) - &t(&d, &p).scale(&UPoly::u());
    let slice = f_l(n).grade_slice(1).unwrap();
    assert_eq!(slice, expected);
    assert_eq!(slice.specialize_u(&Rational::one()), -t(&d, &p));
    assert_eq!(f_l(n).grade_slice(0).unwrap(), TensorElement::one(2, n));
}

#[test]
fn counit_kills_all_but_the_unit() {
    let f = f_l(4);
    assert_eq!(counit_contract(&f, 0).unwrap(), TensorElement::one(1, 4));
    assert_eq!(counit_contract(&f, 1).unwrap(), TensorElement::one(1, 4));
}

#[test]
fn deformed_coproduct_of_p_first_correction() {
    let n = 3;
    let (p, one) = (TensorElement::p(n), TensorElement::one(1, n));
    let delta = conjugate(&f_l(n), &p, &f_l_inv(n)).unwrap();
    let two_u_minus_one = &UPoly::u().scale(&Rational::from(2)) - &UPoly::one();
    assert_eq!(delta.grade_slice(1).unwrap(), &t(&p, &one) + &t(&one, &p));
    assert_eq!(
        delta.grade_slice(2).unwrap(),
        t(&p, &p).scale(&two_u_minus_one)
    );
}

#[test]
fn deformed_coproduct_of_d_at_u_zero() {
    let n = 1;
    let (p, d, one) = (
        TensorElement::p(n),
        TensorElement::d(n),
        TensorElement::one(1, n),
    );
    let delta = conjugate(&f0(n), &d, &f0_inverse(n)).unwrap();
    // D⊗1 + (1-P/κ)⁻¹⊗D
    let expected = &(&t(&d, &one) + &t(&one, &d)) + &t(&p, &d);
    assert_eq!(delta, expected);
}

#[test]
fn f0_and_f1_differ_at_grade_one() {
    let cmp = f0(1).equals(&f1(1)).unwrap();
    assert!(!cmp.equal);
    assert_eq!(cmp.first_difference.unwrap().grade, 1);
}

#[test]
fn inverse_pair_violation_is_detected() {
    let n = 2;
    let err = conjugate(&f_l(n), &TensorElement::p(n), &f0_inverse(n)).unwrap_err();
    assert!(matches!(
        err,
        jtwist_core::Error::NotInversePair { grade: 1 }
    ));
}

#[test]
fn trivial_orders() {
    assert!(check_cocycle(&TwistSpec::closed(Family::L, 0)).passed());
    assert!(check_endpoints(Family::L, 6).passed());
    let r_closed = TwistSpec::new(Family::R, Direction::Twist, Form::Closed, 2);
    assert!(!check_cocycle(&r_closed).passed());
}
