//! Deformed coproducts and antipodes written as rational functions of `P`,
//! expanded as truncated series.

use core::str::FromStr;

use super::Family;
use crate::borel::{inverse, TensorElement};
use crate::exactalg::UPoly;
use crate::Error;

/// Generator whose deformed Hopf data is checked. `Q` stands for a momentum
/// `p_μ` not proportional to `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    P,
    Q,
    D,
}

impl Generator {
    pub fn element(&self, n: u32) -> TensorElement {
        match self {
            Generator::P => TensorElement::p(n),
            Generator::Q => TensorElement::q(n),
            Generator::D => TensorElement::d(n),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::P => "P",
            Generator::Q => "Q",
            Generator::D => "D",
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "P" | "p" => Ok(Generator::P),
            "Q" | "q" => Ok(Generator::Q),
            "D" | "d" => Ok(Generator::D),
            _ => Err(Error::Parse("generator must be P, Q or D")),
        }
    }
}

/// Closed-form Hopf data of the interpolating families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// `Δ^F(g)` for `g ∈ {P, Q, D}`; for `R` and `D` the `⊗D` reading of
    /// the second summand.
    Coproduct {
        family: Family,
        generator: Generator,
    },
    /// `Δ^{F_R}(D)` with the second summand read as `1/(1-(1-u)P/κ) ⊗ 1`.
    CoproductRDLiteral,
    /// `S^F(g)` exactly as typeset, signs included.
    Antipode {
        family: Family,
        generator: Generator,
    },
    /// `(1⊗1 + u(1-u)P⊗P/κ²)⁻¹`.
    LrFactor,
}

impl FromStr for Target {
    type Err = Error;

    /// Ids of the form `DeltaL_p`, `SR_D`, `LRfactor`; `p` is the probe `Q`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "LRfactor" {
            return Ok(Target::LrFactor);
        }
        if s == "DeltaR_D_literal" {
            return Ok(Target::CoproductRDLiteral);
        }
        let (head, gen) = s
            .split_once('_')
            .ok_or(Error::UnknownTarget("malformed id"))?;
        let generator = match gen {
            "p" => Generator::Q,
            "P" => Generator::P,
            "D" => Generator::D,
            _ => return Err(Error::UnknownTarget("generator suffix must be p, P or D")),
        };
        let (kind, family) = match head {
            "DeltaL" => (0, Family::L),
            "DeltaR" => (0, Family::R),
            "SL" => (1, Family::L),
            "SR" => (1, Family::R),
            _ => {
                return Err(Error::UnknownTarget(
                    "prefix must be DeltaL, DeltaR, SL or SR",
                ))
            }
        };
        Ok(if kind == 0 {
            Target::Coproduct { family, generator }
        } else {
            Target::Antipode { family, generator }
        })
    }
}

/// `1 + c·P/κ`
fn one_plus(n: u32, c: &UPoly) -> TensorElement {
    &TensorElement::one(1, n) + &TensorElement::p(n).scale(c)
}

/// `1⊗1 + u(1-u) P⊗P/κ²`
fn lr_denominator(n: u32, u: &UPoly) -> Result<TensorElement, Error> {
    let c = u * &(&UPoly::one() - u);
    let p = TensorElement::p(n);
    TensorElement::one(2, n).try_add(&p.tensor(&p)?.scale(&c))
}

fn tensor(a: &TensorElement, b: &TensorElement) -> Result<TensorElement, Error> {
    a.tensor(b)
}

/// Expands `target` at truncation `n`, with `u` symbolic or fixed through the
/// coefficient polynomial `u`.
pub fn build_target(target: Target, n: u32, u: &UPoly) -> Result<TensorElement, Error> {
    let one = TensorElement::one(1, n);
    let a_plus = one_plus(n, u);
    let b_minus = one_plus(n, &(u - &UPoly::one()));
    let c_minus = one_plus(n, &(&u.scale(&2.into()) - &UPoly::one()));
    let check_family = |family: Family| match family {
        Family::L | Family::R => Ok(()),
        _ => Err(Error::UnknownTarget(
            "Hopf targets exist for families L and R only",
        )),
    };
    match target {
        Target::LrFactor => inverse(&lr_denominator(n, u)?),
        Target::Coproduct {
            family,
            generator: g @ (Generator::P | Generator::Q),
        } => {
            check_family(family)?;
            let m = g.element(n);
            let numerator = tensor(&m, &a_plus)?.try_add(&tensor(&b_minus, &m)?)?;
            numerator.normal_mul(&inverse(&lr_denominator(n, u)?)?)
        }
        Target::Coproduct {
            family,
            generator: Generator::D,
        } => {
            check_family(family)?;
            let d = TensorElement::d(n);
            let sum = tensor(&d, &inverse(&a_plus)?)?.try_add(&tensor(&inverse(&b_minus)?, &d)?)?;
            let g = lr_denominator(n, u)?;
            match family {
                Family::L => sum.normal_mul(&g),
                _ => g.normal_mul(&sum),
            }
        }
        Target::CoproductRDLiteral => {
            let d = TensorElement::d(n);
            let sum =
                tensor(&d, &inverse(&a_plus)?)?.try_add(&tensor(&inverse(&b_minus)?, &one)?)?;
            lr_denominator(n, u)?.normal_mul(&sum)
        }
        Target::Antipode {
            family,
            generator: g @ (Generator::P | Generator::Q),
        } => {
            check_family(family)?;
            let m = g.element(n).normal_mul(&inverse(&c_minus)?)?;
            Ok(match family {
                Family::L => m,
                _ => -m,
            })
        }
        Target::Antipode {
            family,
            generator: Generator::D,
        } => {
            check_family(family)?;
            let d = TensorElement::d(n);
            let out = match family {
                // -((1-(1-2u)P)/(1+uP)) D (1+uP)
                Family::L => c_minus
                    .normal_mul(&inverse(&a_plus)?)?
                    .normal_mul(&d)?
                    .normal_mul(&a_plus)?,
                // -(1-(1-u)P) D ((1-(1-2u)P)/(1-(1-u)P))
                _ => b_minus
                    .normal_mul(&d)?
                    .normal_mul(&c_minus)?
                    .normal_mul(&inverse(&b_minus)?)?,
            };
            Ok(-out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;

    fn t(a: &TensorElement, b: &TensorElement) -> TensorElement {
        a.tensor(b).unwrap()
    }

    #[test]
    fn coproduct_of_probe_first_order() {
        let n = 1;
        let u = UPoly::u();
        let got = build_target(
            Target::Coproduct {
                family: Family::L,
                generator: Generator::Q,
            },
            n,
            &u,
        )
        .unwrap();
        let (p, q, one) = (
            TensorElement::p(n),
            TensorElement::q(n),
            TensorElement::one(1, n),
        );
        let expected = &(&(&t(&q, &one) + &t(&one, &q)) + &t(&q, &p).scale(&u))
            - &t(&p, &q).scale(&(&UPoly::one() - &u));
        assert_eq!(got, expected);
    }

    #[test]
    fn lr_factor_low_orders() {
        let u = UPoly::u();
        assert_eq!(
            build_target(Target::LrFactor, 1, &u).unwrap(),
            TensorElement::one(2, 1)
        );
        let p = TensorElement::p(2);
        let c = &u * &(&UPoly::one() - &u);
        let expected = &TensorElement::one(2, 2) - &t(&p, &p).scale(&c);
        assert_eq!(build_target(Target::LrFactor, 2, &u).unwrap(), expected);
    }

    #[test]
    fn antipode_of_d_at_u_zero() {
        let n = 3;
        let got = build_target(
            Target::Antipode {
                family: Family::L,
                generator: Generator::D,
            },
            n,
            &UPoly::constant(Rational::zero()),
        )
        .unwrap();
        let one_minus_p = &TensorElement::one(1, n) - &TensorElement::p(n);
        assert_eq!(got, -(&one_minus_p * &TensorElement::d(n)));
    }

    #[test]
    fn target_ids() {
        assert_eq!("LRfactor".parse::<Target>().unwrap(), Target::LrFactor);
        assert_eq!(
            "SR_p".parse::<Target>().unwrap(),
            Target::Antipode {
                family: Family::R,
                generator: Generator::Q
            }
        );
        assert!(matches!(
            "DeltaX_p".parse::<Target>(),
            Err(Error::UnknownTarget(_))
        ));
        assert!(build_target(
            Target::Coproduct {
                family: Family::Zero,
                generator: Generator::P
            },
            1,
            &UPoly::u()
        )
        .is_err());
    }
}
