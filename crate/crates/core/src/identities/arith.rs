//! The two evaluation backends shared by every identity formula: exact
//! polynomials in `x, y, z`, and plain rationals at a fixed point.

use alloc::vec::Vec;

use crate::exactalg::{binom_poly, DPoly, Rational};

pub(crate) trait Arith {
    type V: Clone + PartialEq;

    fn var(&self, slot: usize) -> Self::V;
    fn int(&self, n: i64) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn binom(&self, t: &Self::V, k: u32) -> Self::V;

    /// `Σ coeffs[i]·var(i) + c`
    fn lin(&self, coeffs: &[i64], c: i64) -> Self::V {
        let mut acc = self.int(c);
        for (i, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                acc = self.add(&acc, &self.mul(&self.int(a), &self.var(i)));
            }
        }
        acc
    }

    /// `binom(Σ coeffs[i]·var(i) + c, k)`
    fn b(&self, coeffs: &[i64], c: i64, k: u32) -> Self::V {
        self.binom(&self.lin(coeffs, c), k)
    }

    fn sign(&self, n: u32) -> Self::V {
        self.int(if n.is_multiple_of(2) { 1 } else { -1 })
    }

    fn zero(&self) -> Self::V {
        self.int(0)
    }

    fn prod(&self, factors: &[Self::V]) -> Self::V {
        factors.iter().fold(self.int(1), |acc, f| self.mul(&acc, f))
    }
}

pub(crate) struct Symbolic {
    pub legs: usize,
}

impl Arith for Symbolic {
    type V = DPoly;

    fn var(&self, slot: usize) -> DPoly {
        DPoly::var(self.legs, slot)
    }
    fn int(&self, n: i64) -> DPoly {
        DPoly::from_int(self.legs, n)
    }
    fn add(&self, a: &DPoly, b: &DPoly) -> DPoly {
        a + b
    }
    fn mul(&self, a: &DPoly, b: &DPoly) -> DPoly {
        a * b
    }
    fn binom(&self, t: &DPoly, k: u32) -> DPoly {
        binom_poly(t, k)
    }
}

/// Evaluation at a point, with the binomial symbol computed directly as
/// `t(t-1)...(t-k+1)/k!`.
pub(crate) struct Point {
    pub values: Vec<Rational>,
}

impl Arith for Point {
    type V = Rational;

    fn var(&self, slot: usize) -> Rational {
        self.values[slot].clone()
    }
    fn int(&self, n: i64) -> Rational {
        Rational::from(n)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn binom(&self, t: &Rational, k: u32) -> Rational {
        let mut num = Rational::one();
        let mut f = t.clone();
        for _ in 0..k {
            num = &num * &f;
            f = &f - &Rational::one();
        }
        num.checked_div(&Rational::factorial(k))
            .expect("k! is nonzero")
    }
}
