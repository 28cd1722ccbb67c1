use core::fmt;
use core::str::FromStr;

use crate::exactalg::{Rational, UPoly};
use crate::Error;

/// Twist family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `F₀ = exp(-ln(1 - P/κ) ⊗ D)`.
    Zero,
    /// `F₁ = exp(-D ⊗ ln(1 + P/κ))`.
    One,
    /// Interpolating family built with the cochain `exp(-(u/κ) DP)`.
    L,
    /// Interpolating family built with the cochain `exp(-(u/κ) PD)`.
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Twist,
    Inverse,
}

/// How an element is assembled.
///
/// * `Product`: three exponential factors built from the cochain.
/// * `Closed`: the closed double sum. Available for `F₀^{±1}`, `F₁^{±1}`,
///   `F_{L,u}` and `F_{R,u}⁻¹`.
/// * `InvertedClosed`: series inverse of the closed form of the opposite
///   direction; available for `F_{L,u}⁻¹` and `F_{R,u}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    Product,
    Closed,
    InvertedClosed,
}

/// Treatment of the interpolation parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UMode {
    Symbolic,
    Value(Rational),
}

impl UMode {
    /// `u` as a coefficient polynomial: the indeterminate or a constant.
    pub fn as_upoly(&self) -> UPoly {
        match self {
            UMode::Symbolic => UPoly::u(),
            UMode::Value(r) => UPoly::constant(r.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistSpec {
    pub family: Family,
    pub direction: Direction,
    pub form: Form,
    pub order: u32,
    pub umode: UMode,
}

impl TwistSpec {
    pub fn new(family: Family, direction: Direction, form: Form, order: u32) -> Self {
        TwistSpec {
            family,
            direction,
            form,
            order,
            umode: UMode::Symbolic,
        }
    }

    /// Symbolic-`u` twist in closed form.
    pub fn closed(family: Family, order: u32) -> Self {
        Self::new(family, Direction::Twist, Form::Closed, order)
    }

    pub fn with_u(mut self, umode: UMode) -> Self {
        self.umode = umode;
        self
    }

    /// Whether `build_twist` accepts this combination.
    pub fn is_supported(&self) -> bool {
        use {Direction::*, Family::*, Form::*};
        match (self.family, self.form) {
            (Zero | One, Closed) => true,
            (Zero | One, _) => false,
            (_, Product) => true,
            (L, Closed) | (R, InvertedClosed) => self.direction == Twist,
            (L, InvertedClosed) | (R, Closed) => self.direction == Inverse,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Zero => "0",
            Family::One => "1",
            Family::L => "L",
            Family::R => "R",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "0" | "zero" | "Zero" => Ok(Family::Zero),
            "1" | "one" | "One" => Ok(Family::One),
            "L" | "l" => Ok(Family::L),
            "R" | "r" => Ok(Family::R),
            _ => Err(Error::Parse("family must be one of 0, 1, L, R")),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Twist => "twist",
            Direction::Inverse => "inverse",
        })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Product => "product",
            Form::Closed => "closed",
            Form::InvertedClosed => "inverted-closed",
        })
    }
}

impl FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "product" => Ok(Form::Product),
            "closed" => Ok(Form::Closed),
            "inverted-closed" | "inverted" => Ok(Form::InvertedClosed),
            _ => Err(Error::Parse(
                "form must be product, closed or inverted-closed",
            )),
        }
    }
}

impl fmt::Display for UMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UMode::Symbolic => f.write_str("symbolic"),
            UMode::Value(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for UMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "symbolic" | "u" => Ok(UMode::Symbolic),
            _ => Ok(UMode::Value(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_combinations() {
        use {Direction::*, Family::*, Form::*};
        assert!(TwistSpec::new(Zero, Twist, Closed, 2).is_supported());
        assert!(TwistSpec::new(One, Inverse, Closed, 2).is_supported());
        assert!(!TwistSpec::new(Zero, Twist, Product, 2).is_supported());
        assert!(TwistSpec::new(L, Inverse, Product, 2).is_supported());
        assert!(TwistSpec::new(L, Twist, Closed, 2).is_supported());
        assert!(!TwistSpec::new(L, Inverse, Closed, 2).is_supported());
        assert!(TwistSpec::new(R, Inverse, Closed, 2).is_supported());
        assert!(TwistSpec::new(R, Twist, InvertedClosed, 2).is_supported());
        assert!(!TwistSpec::new(R, Twist, Closed, 2).is_supported());
    }

    #[test]
    fn parse_modes() {
        assert_eq!("symbolic".parse::<UMode>().unwrap(), UMode::Symbolic);
        assert_eq!(
            "3/7".parse::<UMode>().unwrap(),
            UMode::Value(Rational::new(3, 7).unwrap())
        );
        assert!("1/0".parse::<UMode>().is_err());
        assert_eq!("R".parse::<Family>().unwrap(), Family::R);
        assert!("Q".parse::<Family>().is_err());
    }
}
