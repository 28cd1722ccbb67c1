//! Undeformed Hopf structure maps of `U(b)` extended leg-wise.

use super::{series, LegMonomial, TensorElement};
use crate::exactalg::{Rational, UPoly};
use crate::{Error, MAX_LEGS};

/// Which leg of a two-leg element receives the antipode in
/// [`fold_mul_antipode`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Σ S(f⁽¹⁾) f⁽²⁾`
    Left,
    /// `Σ f⁽¹⁾ S(f⁽²⁾)`
    Right,
}

/// Applies the undeformed coproduct to leg `slot` (0-based), producing an
/// element with one more leg.
///
/// `P` and `Q` are primitive, so `P^a ↦ Σ C(a,i) P^i ⊗ P^{a-i}`; the
/// dilatation variable of the slot is split into the sum of two variables.
/// The momentum part stays left of the split polynomial, so the result is
/// already normal-ordered.
pub fn coproduct(e: &TensorElement, slot: usize) -> Result<TensorElement, Error> {
    let legs = e.legs();
    if legs >= MAX_LEGS {
        return Err(Error::LegCount {
            op: "coproduct",
            legs,
        });
    }
    if slot >= legs {
        return Err(Error::SlotOutOfRange { slot, legs });
    }
    let mut out = TensorElement::zero(legs + 1, e.truncation());
    for (m, c) in e.terms() {
        let split = c.split_variable(slot)?;
        let leg = m.leg(slot);
        for i in 0..=leg.p {
            for j in 0..=leg.q {
                let mut nm = *m;
                for k in (slot + 1..legs).rev() {
                    nm.set_leg(k + 1, m.leg(k));
                }
                nm.set_leg(slot, LegMonomial::new(i, j));
                nm.set_leg(slot + 1, LegMonomial::new(leg.p - i, leg.q - j));
                let weight = &Rational::binomial(leg.p, i) * &Rational::binomial(leg.q, j);
                out.add_term(nm, &split.scale_rational(&weight));
            }
        }
    }
    Ok(out)
}

/// Applies the counit to leg `slot`: `ε(P) = ε(Q) = ε(D) = 0`.
pub fn counit_contract(e: &TensorElement, slot: usize) -> Result<TensorElement, Error> {
    let legs = e.legs();
    if legs < 2 {
        return Err(Error::LegCount {
            op: "counit_contract",
            legs,
        });
    }
    if slot >= legs {
        return Err(Error::SlotOutOfRange { slot, legs });
    }
    let mut out = TensorElement::zero(legs - 1, e.truncation());
    for (m, c) in e.terms().filter(|(m, _)| m.leg(slot).is_one()) {
        let mut nm = *m;
        for k in slot..legs - 1 {
            nm.set_leg(k, m.leg(k + 1));
        }
        nm.set_leg(legs - 1, LegMonomial::ONE);
        out.add_term(nm, &c.drop_variable(slot)?);
    }
    Ok(out)
}

/// Counit of a one-leg element: its constant term.
pub fn counit(e: &TensorElement) -> Result<UPoly, Error> {
    if e.legs() != 1 {
        return Err(Error::LegCount {
            op: "counit",
            legs: e.legs(),
        });
    }
    Ok(e.terms()
        .find(|(m, _)| m.is_one())
        .map(|(_, c)| c.constant_term())
        .unwrap_or_default())
}

/// Undeformed antipode on one leg: the anti-automorphism with
/// `S(D) = -D`, `S(P) = -P`, `S(Q) = -Q`, giving
/// `S(P^a Q^b q(D)) = (-1)^{a+b} P^a Q^b q(-D + a + b)`.
pub fn antipode(e: &TensorElement) -> Result<TensorElement, Error> {
    if e.legs() != 1 {
        return Err(Error::LegCount {
            op: "antipode",
            legs: e.legs(),
        });
    }
    Ok(e.map_coeffs(|m, c| {
        let leg = m.leg(0);
        let shift = Rational::from(leg.degree());
        c.substitute_affine(&[-1], &[shift])
            .scale_rational(&Rational::sign_pow(leg.degree()))
    }))
}

/// Multiplies the two legs after applying the antipode to one of them.
///
/// With `Side::Right` this is the twisted-antipode element
/// `χ = Σ f⁽¹⁾ S(f⁽²⁾)`.
pub fn fold_mul_antipode(e: &TensorElement, side: Side) -> Result<TensorElement, Error> {
    if e.legs() != 2 {
        return Err(Error::LegCount {
            op: "fold_mul_antipode",
            legs: e.legs(),
        });
    }
    let mut out = TensorElement::zero(1, e.truncation());
    for (coeff, factors) in e.leg_factors() {
        let (first, second) = (&factors[0], &factors[1]);
        let prod = match side {
            Side::Right => first.normal_mul(&antipode(second)?)?,
            Side::Left => antipode(first)?.normal_mul(second)?,
        };
        out = out.try_add(&prod.scale(&coeff))?;
    }
    Ok(out)
}

/// Multiplies all legs of an element together in order.
pub fn multiply_legs(e: &TensorElement) -> Result<TensorElement, Error> {
    let mut out = TensorElement::zero(1, e.truncation());
    for (coeff, factors) in e.leg_factors() {
        let mut prod = TensorElement::one(1, e.truncation());
        for f in &factors {
            prod = prod.normal_mul(f)?;
        }
        out = out.try_add(&prod.scale(&coeff))?;
    }
    Ok(out)
}

/// `F · Δ(X) · F⁻¹` for a one-leg `X`.
///
/// Fails if `F · F⁻¹` is not the unit up to the truncation order.
pub fn conjugate(
    f: &TensorElement,
    x: &TensorElement,
    f_inv: &TensorElement,
) -> Result<TensorElement, Error> {
    let unit = TensorElement::one(f.legs(), f.truncation());
    let check = f.normal_mul(f_inv)?.equals(&unit)?;
    if let Some(d) = check.first_difference {
        return Err(Error::NotInversePair { grade: d.grade });
    }
    let dx = coproduct(x, 0)?;
    f.normal_mul(&dx)?.normal_mul(f_inv)
}

/// `χ · S(X) · χ⁻¹` with `χ = Σ f⁽¹⁾ S(f⁽²⁾)`, the antipode twisted by `F`.
pub fn twisted_antipode(f: &TensorElement, x: &TensorElement) -> Result<TensorElement, Error> {
    let chi = fold_mul_antipode(f, Side::Right)?;
    let chi_inv = series::inverse(&chi)?;
    chi.normal_mul(&antipode(x)?)?.normal_mul(&chi_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::DPoly;

    const N: u32 = 4;

    fn p() -> TensorElement {
        TensorElement::p(N)
    }
    fn d() -> TensorElement {
        TensorElement::d(N)
    }
    fn one() -> TensorElement {
        TensorElement::one(1, N)
    }
    fn t(a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.tensor(b).unwrap()
    }

    #[test]
    fn coproduct_of_p() {
        assert_eq!(
            coproduct(&p(), 0).unwrap(),
            &t(&p(), &one()) + &t(&one(), &p())
        );
        assert_eq!(coproduct(&one(), 0).unwrap(), TensorElement::one(2, N));
    }

    #[test]
    fn coproduct_of_p_squared() {
        let p2 = &p() * &p();
        let two = TensorElement::scalar(2, N, UPoly::from_int(2));
        let expected = &(&t(&p2, &one()) + &(&two * &t(&p(), &p()))) + &t(&one(), &p2);
        assert_eq!(coproduct(&p2, 0).unwrap(), expected);
    }

    #[test]
    fn coproduct_of_second_leg_keeps_first() {
        let e = t(&d(), &p());
        let lhs = coproduct(&e, 1).unwrap();
        // D ⊗ (P⊗1 + 1⊗P)
        let dp1 = t(&d(), &p()).embed(3, &[0, 1]).unwrap();
        let d1p = t(&d(), &p()).embed(3, &[0, 2]).unwrap();
        assert_eq!(lhs, &dp1 + &d1p);
    }

    #[test]
    fn coproduct_rejects_three_legs() {
        let e = TensorElement::one(3, N);
        assert!(matches!(coproduct(&e, 0), Err(Error::LegCount { .. })));
    }

    #[test]
    fn counit_examples() {
        let unit2 = TensorElement::one(2, N);
        assert_eq!(counit_contract(&unit2, 0).unwrap(), one());
        assert!(counit_contract(&t(&p(), &d()), 0).unwrap().is_zero());
        assert_eq!(
            counit_contract(&t(&d(), &p()), 1).unwrap(),
            TensorElement::zero(1, N)
        );
        assert_eq!(counit_contract(&t(&one(), &p()), 0).unwrap(), p());
        assert!(matches!(
            counit_contract(&one(), 0),
            Err(Error::LegCount { .. })
        ));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&d()).unwrap(), -d());
        // S(PD) = S(D) S(P) = DP = P(D - 1)
        let pd = &p() * &d();
        let expected = &pd - &p();
        assert_eq!(antipode(&pd).unwrap(), expected);
        let pdd = &pd * &d();
        assert_eq!(antipode(&antipode(&pdd).unwrap()).unwrap(), pdd);
        assert!(antipode(&TensorElement::one(2, N)).is_err());
    }

    #[test]
    fn antipode_is_anti_multiplicative() {
        let a = &(&p() * &d()) + &TensorElement::q(N);
        let b = &(&d() * &d()) + &p();
        let lhs = antipode(&(&a * &b)).unwrap();
        let rhs = &antipode(&b).unwrap() * &antipode(&a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fold_examples() {
        let unit2 = TensorElement::one(2, N);
        assert_eq!(fold_mul_antipode(&unit2, Side::Right).unwrap(), one());
        let pd = t(&p(), &d());
        assert_eq!(fold_mul_antipode(&pd, Side::Right).unwrap(), -(&p() * &d()));
        // S(D) P = -DP = -P(D - 1)
        let dp = t(&d(), &p());
        let expected = -(&(&p() * &d()) - &p());
        assert_eq!(fold_mul_antipode(&dp, Side::Left).unwrap(), expected);
        assert!(fold_mul_antipode(&p(), Side::Left).is_err());
    }

    #[test]
    fn conjugate_by_unit() {
        let unit2 = TensorElement::one(2, N);
        let r = conjugate(&unit2, &p(), &unit2).unwrap();
        assert_eq!(r, coproduct(&p(), 0).unwrap());
        let bad = &unit2 + &t(&p(), &one());
        assert_eq!(
            conjugate(&bad, &p(), &unit2),
            Err(Error::NotInversePair { grade: 1 })
        );
    }

    #[test]
    fn multiply_legs_of_dp() {
        let e = t(&d(), &p());
        let expected = TensorElement::one_leg(N, 1, 0, &DPoly::var(1, 0) - &DPoly::one(1));
        assert_eq!(multiply_legs(&e).unwrap(), expected);
    }
}
