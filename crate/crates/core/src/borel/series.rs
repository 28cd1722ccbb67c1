use alloc::vec::Vec;

use super::TensorElement;
use crate::exactalg::{Rational, UPoly};
use crate::Error;

/// `1/k!` for `k = 0..=n`.
pub fn exp_coefficients(n: u32) -> Vec<UPoly> {
    (0..=n)
        .map(|k| UPoly::constant(Rational::factorial(k).recip().expect("k! > 0")))
        .collect()
}

/// Coefficients of `ln(1 + a)`: `0, 1, -1/2, 1/3, …`.
pub fn log1p_coefficients(n: u32) -> Vec<UPoly> {
    (0..=n)
        .map(|k| match k {
            0 => UPoly::zero(),
            _ => UPoly::constant(
                Rational::new(if k % 2 == 1 { 1 } else { -1 }, k as i64).expect("k > 0"),
            ),
        })
        .collect()
}

/// Coefficients of `1/(1 + a)`: `(-1)^k`.
pub fn geometric_coefficients(n: u32) -> Vec<UPoly> {
    (0..=n)
        .map(|k| UPoly::constant(Rational::sign_pow(k)))
        .collect()
}

/// `Σ_k c_k a^k`, truncated at the order of `a`.
///
/// `a` must have no grade-0 term so that `a^k` vanishes for `k` beyond the
/// truncation order.
pub fn series_apply(coeffs: &[UPoly], a: &TensorElement) -> Result<TensorElement, Error> {
    if a.min_grade() == Some(0) {
        return Err(Error::GradeZeroTerm);
    }
    let n = a.truncation();
    let mut acc = TensorElement::zero(a.legs(), n);
    let mut power = TensorElement::one(a.legs(), n);
    for (k, c) in coeffs.iter().enumerate() {
        if k > 0 {
            if k as u32 > n {
                break;
            }
            power = power.normal_mul(a)?;
            if power.is_zero() {
                break;
            }
        }
        if !c.is_zero() {
            acc = acc.try_add(&power.scale(c))?;
        }
    }
    Ok(acc)
}

/// Truncated `exp(a)`.
pub fn exp(a: &TensorElement) -> Result<TensorElement, Error> {
    series_apply(&exp_coefficients(a.truncation()), a)
}

/// Truncated `ln(1 + a)`.
pub fn log1p(a: &TensorElement) -> Result<TensorElement, Error> {
    series_apply(&log1p_coefficients(a.truncation()), a)
}

/// Two-sided inverse of an element whose grade-0 part is a nonzero rational
/// multiple of the unit.
pub fn inverse(e: &TensorElement) -> Result<TensorElement, Error> {
    let n = e.truncation();
    let legs = e.legs();
    let grade0 = e.grade_slice(0)?;
    let c = match grade0.terms().collect::<Vec<_>>().as_slice() {
        [(m, p)] if m.is_one() && p.len() == 1 => p
            .constant_term()
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NotInvertible)?,
        _ => return Err(Error::NotInvertible),
    };
    let c_inv = c.recip()?;
    // e = c (1 + a)  =>  e^{-1} = c^{-1} Σ (-a)^k
    let a = e
        .try_sub(&TensorElement::scalar(legs, n, UPoly::constant(c)))?
        .scale_rational(&c_inv);
    Ok(series_apply(&geometric_coefficients(n), &a)?.scale_rational(&c_inv))
}
