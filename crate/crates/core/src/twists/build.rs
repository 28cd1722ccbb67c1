use super::{Direction, Family, Form, TwistSpec};
use crate::borel::{coproduct, exp, inverse, log1p, LegMonomial, Monomial, TensorElement};
use crate::exactalg::{binom_poly, DPoly, Rational, UPoly};
use crate::Error;

/// Assembles the element named by `spec`, normal-ordered and truncated at
/// `spec.order`.
pub fn build_twist(spec: &TwistSpec) -> Result<TensorElement, Error> {
    if !spec.is_supported() {
        return Err(Error::Unsupported(match (spec.family, spec.form) {
            (Family::Zero | Family::One, _) => "F0 and F1 exist only in closed form",
            (Family::L, Form::Closed) => "closed form of F_L^-1: use inverted-closed",
            (Family::L, _) => "inverted-closed form of F_L: use closed",
            (Family::R, Form::Closed) => "closed form of F_R: use inverted-closed",
            (Family::R, _) => "inverted-closed form of F_R^-1: use closed",
        }));
    }
    let n = spec.order;
    let u = spec.umode.as_upoly();
    let inverse_dir = spec.direction == Direction::Inverse;
    match (spec.family, spec.form) {
        (Family::Zero, _) => Ok(if inverse_dir { f0_inverse(n) } else { f0(n) }),
        (Family::One, _) => Ok(if inverse_dir { f1_inverse(n) } else { f1(n) }),
        (Family::L, Form::Product) => cochain_twist(&cochain_l(n, &u), inverse_dir),
        (Family::R, Form::Product) => cochain_twist(&cochain_r(n, &u), inverse_dir),
        (Family::L, Form::Closed) => Ok(closed_l(n, &u)),
        (Family::L, Form::InvertedClosed) => inverse(&closed_l(n, &u)),
        (Family::R, Form::Closed) => Ok(closed_r_inverse(n, &u)),
        (Family::R, Form::InvertedClosed) => inverse(&closed_r_inverse(n, &u)),
    }
}

fn two_leg(p1: u32, p2: u32) -> Monomial {
    Monomial::new(&[LegMonomial::new(p1, 0), LegMonomial::new(p2, 0)])
}

/// `binom(sign·x_slot + shift, k)` in two variables.
fn binom_var(slot: usize, sign: i64, shift: i64, k: u32) -> DPoly {
    let t = &DPoly::var(2, slot).scale_rational(&Rational::from(sign)) + &DPoly::from_int(2, shift);
    binom_poly(&t, k)
}

/// `F_{L,u} = Σ_{k,l} κ^{-(k+l)} binom(-D, l) (u-1)^k P^k ⊗ binom(-D, k) (uP)^l`,
/// normal-ordered as `P^k binom(-D+k, l) ⊗ P^l binom(-D+l, k)`.
pub fn closed_l(n: u32, u: &UPoly) -> TensorElement {
    let u_minus_1 = u - &UPoly::one();
    let mut out = TensorElement::zero(2, n);
    for k in 0..=n {
        for l in 0..=n - k {
            let coeff = &(u_minus_1.pow(k)) * &u.pow(l);
            if coeff.is_zero() {
                continue;
            }
            let d = &binom_var(0, -1, k as i64, l) * &binom_var(1, -1, l as i64, k);
            out.add_term(two_leg(k, l), &d.scale(&coeff));
        }
    }
    out
}

/// `F_{R,u}⁻¹ = Σ_{k,l} (u-1)^k (P/κ)^k binom(D, l) ⊗ (uP/κ)^l binom(D, k)`.
pub fn closed_r_inverse(n: u32, u: &UPoly) -> TensorElement {
    let u_minus_1 = u - &UPoly::one();
    let mut out = TensorElement::zero(2, n);
    for k in 0..=n {
        for l in 0..=n - k {
            let coeff = &(u_minus_1.pow(k)) * &u.pow(l);
            if coeff.is_zero() {
                continue;
            }
            let d = &binom_var(0, 1, 0, l) * &binom_var(1, 1, 0, k);
            out.add_term(two_leg(k, l), &d.scale(&coeff));
        }
    }
    out
}

/// `F_{R,u} = Σ_{k,l} (binom(-D-1,l)⊗binom(-D-1,k) + binom(-D-1,l)⊗binom(-D-1,k-1)
/// + binom(-D-1,l-1)⊗binom(-D-1,k)) (u-1)^k (P/κ)^k ⊗ (uP/κ)^l`, with
/// `binom(T, -1) = 0`; normal-ordered by shifting `D ↦ D-k` (resp. `D-l`).
pub fn closed_r_direct(n: u32, u: &UPoly) -> TensorElement {
    let u_minus_1 = u - &UPoly::one();
    let mut out = TensorElement::zero(2, n);
    for k in 0..=n {
        for l in 0..=n - k {
            let coeff = &(u_minus_1.pow(k)) * &u.pow(l);
            if coeff.is_zero() {
                continue;
            }
            let x = |m: u32| binom_var(0, -1, k as i64 - 1, m);
            let y = |m: u32| binom_var(1, -1, l as i64 - 1, m);
            let mut d = &x(l) * &y(k);
            if k > 0 {
                d = &d + &(&x(l) * &y(k - 1));
            }
            if l > 0 {
                d = &d + &(&x(l - 1) * &y(k));
            }
            out.add_term(two_leg(k, l), &d.scale(&coeff));
        }
    }
    out
}

/// `F₀ = Σ_k (-P/κ)^k ⊗ binom(-D, k)`.
pub fn f0(n: u32) -> TensorElement {
    TensorElement::from_terms(
        2,
        n,
        (0..=n).map(|k| {
            (
                two_leg(k, 0),
                binom_var(1, -1, 0, k).scale_rational(&Rational::sign_pow(k)),
            )
        }),
    )
}

/// `F₀⁻¹ = Σ_k (-P/κ)^k ⊗ binom(D, k)`.
pub fn f0_inverse(n: u32) -> TensorElement {
    TensorElement::from_terms(
        2,
        n,
        (0..=n).map(|k| {
            (
                two_leg(k, 0),
                binom_var(1, 1, 0, k).scale_rational(&Rational::sign_pow(k)),
            )
        }),
    )
}

/// `F₁ = Σ_l binom(-D, l) ⊗ (P/κ)^l`.
pub fn f1(n: u32) -> TensorElement {
    TensorElement::from_terms(
        2,
        n,
        (0..=n).map(|l| (two_leg(0, l), binom_var(0, -1, 0, l))),
    )
}

/// `F₁⁻¹ = Σ_l binom(D, l) ⊗ (P/κ)^l`.
pub fn f1_inverse(n: u32) -> TensorElement {
    TensorElement::from_terms(
        2,
        n,
        (0..=n).map(|l| (two_leg(0, l), binom_var(0, 1, 0, l))),
    )
}

/// `(u/κ) DP = (u/κ) P (D - 1)`.
pub fn cochain_l(n: u32, u: &UPoly) -> TensorElement {
    let d = &DPoly::var(1, 0) - &DPoly::one(1);
    TensorElement::one_leg(n, 1, 0, d.scale(u))
}

/// `(u/κ) PD`.
pub fn cochain_r(n: u32, u: &UPoly) -> TensorElement {
    TensorElement::one_leg(n, 1, 0, DPoly::var(1, 0).scale(u))
}

/// `(1/κ)(DP + vP) = (1/κ) P (D - 1 + v)`.
pub fn cochain_v(n: u32, v: &Rational) -> TensorElement {
    let shift = v - &Rational::one();
    let d = &DPoly::var(1, 0) + &DPoly::constant(1, UPoly::constant(shift));
    TensorElement::one_leg(n, 1, 0, d)
}

/// `∓ ln(1 - P/κ) ⊗ D`: the exponent of `F₀` (or of `F₀⁻¹` when `inverse`).
pub fn jordanian_exponent(n: u32, inverse: bool) -> Result<TensorElement, Error> {
    let log = log1p(&-TensorElement::p(n))?;
    let e = log.tensor(&TensorElement::d(n))?;
    Ok(if inverse { e } else { -e })
}

/// Twist of `F₀` by a grade-1 cochain exponent `c`:
/// `exp(c⊗1 + 1⊗c) · F₀ · exp(-Δc)`, or its inverse
/// `exp(Δc) · F₀⁻¹ · exp(-(c⊗1 + 1⊗c))`.
pub fn cochain_twist(c: &TensorElement, inverse: bool) -> Result<TensorElement, Error> {
    let n = c.truncation();
    let one = TensorElement::one(1, n);
    let sym = c.tensor(&one)?.try_add(&one.tensor(c)?)?;
    let delta = coproduct(c, 0)?;
    let jordan = exp(&jordanian_exponent(n, inverse)?)?;
    if inverse {
        exp(&delta)?.normal_mul(&jordan)?.normal_mul(&exp(&-sym)?)
    } else {
        exp(&sym)?.normal_mul(&jordan)?.normal_mul(&exp(&-delta)?)
    }
}

/// The product-form twist with cochain exponent `(DP + vP)/κ`, which equals
/// `F₁` for every `v`.
pub fn v_family(n: u32, v: &Rational) -> Result<TensorElement, Error> {
    cochain_twist(&cochain_v(n, v), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twists::UMode;

    fn t(a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.tensor(b).unwrap()
    }

    #[test]
    fn f0_low_orders() {
        let n = 2;
        let f = build_twist(&TwistSpec::closed(Family::Zero, n)).unwrap();
        let p = TensorElement::p(n);
        let d = TensorElement::d(n);
        // 1⊗1 + P⊗D + P²⊗(D² + D)/2
        let half = Rational::new(1, 2).unwrap();
        let g2 = t(&(&p * &p), &(&(&d * &d) + &d)).scale_rational(&half);
        let expected = &(&TensorElement::one(2, n) + &t(&p, &d)) + &g2;
        assert_eq!(f, expected);
    }

    #[test]
    fn closed_l_first_orders() {
        assert_eq!(
            build_twist(&TwistSpec::closed(Family::L, 0)).unwrap(),
            TensorElement::one(2, 0)
        );
        let n = 1;
        let f = build_twist(&TwistSpec::closed(Family::L, n)).unwrap();
        let (p, d) = (TensorElement::p(n), TensorElement::d(n));
        let one_minus_u = &UPoly::one() - &UPoly::u();
        let expected = &(&TensorElement::one(2, n) + &t(&p, &d).scale(&one_minus_u))
            - &t(&d, &p).scale(&UPoly::u());
        assert_eq!(f, expected);
    }

    #[test]
    fn closed_l_grade_two_reordering() {
        // k = l = 1: binom(-D,1)(u-1)P ⊗ binom(-D,1) uP = u(u-1) (-D P) ⊗ (-D P)
        let n = 2;
        let f = build_twist(&TwistSpec::closed(Family::L, n)).unwrap();
        let (p, d) = (TensorElement::p(n), TensorElement::d(n));
        let dp = &d * &p;
        let coeff = &UPoly::u() * &(&UPoly::u() - &UPoly::one());
        let expected = t(&dp, &dp).scale(&coeff);
        let m = two_leg(1, 1);
        let got = TensorElement::from_term(2, n, m, f.coeff(&m));
        assert_eq!(got, expected);
    }

    #[test]
    fn jordanian_exponent_matches_closed() {
        for n in 0..=5 {
            let prod = exp(&jordanian_exponent(n, false).unwrap()).unwrap();
            assert_eq!(prod, f0(n), "order {n}");
            let inv = exp(&jordanian_exponent(n, true).unwrap()).unwrap();
            assert_eq!(inv, f0_inverse(n), "order {n}");
        }
    }

    #[test]
    fn unsupported_combinations_error() {
        let spec = TwistSpec::new(Family::Zero, Direction::Twist, Form::Product, 2);
        assert!(matches!(build_twist(&spec), Err(Error::Unsupported(_))));
        let spec = TwistSpec::new(Family::R, Direction::Twist, Form::Closed, 2);
        assert!(matches!(build_twist(&spec), Err(Error::Unsupported(_))));
    }

    #[test]
    fn value_mode_equals_specialized_symbolic() {
        let n = 3;
        let r = Rational::new(3, 7).unwrap();
        for (family, direction, form) in [
            (Family::L, Direction::Twist, Form::Product),
            (Family::R, Direction::Inverse, Form::Closed),
        ] {
            let spec = TwistSpec::new(family, direction, form, n);
            let sym = build_twist(&spec).unwrap().specialize_u(&r);
            let val = build_twist(&spec.clone().with_u(UMode::Value(r.clone()))).unwrap();
            assert_eq!(sym, val);
        }
    }
}
