use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use super::{Rational, UPoly};
use crate::{Error, MAX_LEGS};

/// Exponents of the dilatation variables, one per leg; unused legs stay zero.
pub type Exponents = [u32; MAX_LEGS];

/// Variable names in leg order.
pub const VARIABLE_NAMES: [char; MAX_LEGS] = ['x', 'y', 'z'];

/// Sparse polynomial in up to three commuting dilatation variables with
/// [`UPoly`] coefficients.
///
/// In a tensor element the variable of leg `i` is the generator `D` sitting in
/// that leg; in the identity checks the variables are the plain `x, y, z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPoly {
    legs: usize,
    terms: BTreeMap<Exponents, UPoly>,
}

impl DPoly {
    /// # Panics
    /// If `legs` is zero or exceeds [`MAX_LEGS`].
    pub fn zero(legs: usize) -> Self {
        assert!(
            (1..=MAX_LEGS).contains(&legs),
            "DPoly supports 1..={MAX_LEGS} variables, got {legs}"
        );
        DPoly {
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(legs: usize) -> Self {
        Self::constant(legs, UPoly::one())
    }

    pub fn constant(legs: usize, c: UPoly) -> Self {
        Self::monomial(legs, [0; MAX_LEGS], c)
    }

    pub fn from_int(legs: usize, c: i64) -> Self {
        Self::constant(legs, UPoly::from_int(c))
    }

    pub fn monomial(legs: usize, exps: Exponents, c: UPoly) -> Self {
        let mut p = Self::zero(legs);
        debug_assert!(exps[legs..].iter().all(|&e| e == 0));
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable of leg `slot` (0-based).
    pub fn var(legs: usize, slot: usize) -> Self {
        assert!(slot < legs, "variable {slot} out of range for {legs} legs");
        let mut exps = [0; MAX_LEGS];
        exps[slot] = 1;
        Self::monomial(legs, exps, UPoly::one())
    }

    /// Sums repeated exponent vectors and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponents, UPoly)>>(legs: usize, terms: I) -> Self {
        let mut p = Self::zero(legs);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; MAX_LEGS]).is_some_and(UPoly::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &UPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> UPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Constant term (the coefficient of the empty monomial).
    pub fn constant_term(&self) -> UPoly {
        self.coeff(&[0; MAX_LEGS])
    }

    /// Total degree in the dilatation variables; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: &UPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                slot.add_assign_ref(c);
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub(crate) fn add_assign_ref(&mut self, rhs: &DPoly) {
        debug_assert_eq!(self.legs, rhs.legs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }

    fn check_legs(&self, rhs: &DPoly) -> Result<(), Error> {
        if self.legs != rhs.legs {
            return Err(Error::LegMismatch {
                left: self.legs,
                right: rhs.legs,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &DPoly) -> Result<DPoly, Error> {
        self.check_legs(rhs)?;
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &DPoly) -> Result<DPoly, Error> {
        self.check_legs(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &DPoly) -> Result<DPoly, Error> {
        self.check_legs(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &DPoly) -> DPoly {
        let mut acc: BTreeMap<Exponents, UPoly> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(slot) => slot.add_assign_ref(&prod),
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        DPoly {
            legs: self.legs,
            terms: acc,
        }
    }

    pub fn scale(&self, c: &UPoly) -> DPoly {
        if c.is_zero() {
            return DPoly::zero(self.legs);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (*e, a * c))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        DPoly {
            legs: self.legs,
            terms,
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> DPoly {
        self.scale(&UPoly::constant(c.clone()))
    }

    pub fn pow(&self, exp: u32) -> DPoly {
        let mut acc = DPoly::one(self.legs);
        for _ in 0..exp {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Substitutes `x_i -> sign_i * x_i + shift_i` in every variable at once.
    pub fn substitute_affine(&self, signs: &[i64], shifts: &[Rational]) -> DPoly {
        let mut cur = self.clone();
        for slot in 0..self.legs {
            let sign = signs.get(slot).copied().unwrap_or(1);
            let zero = Rational::zero();
            let shift = shifts.get(slot).unwrap_or(&zero);
            if sign == 1 && shift.is_zero() {
                continue;
            }
            cur = cur.substitute_one(slot, sign, shift);
        }
        cur
    }

    /// Substitutes `x_i -> x_i + offsets_i` for integer offsets.
    pub fn translate(&self, offsets: &[i64]) -> DPoly {
        let shifts: Vec<Rational> = offsets.iter().map(|&o| Rational::from(o)).collect();
        self.substitute_affine(&[], &shifts)
    }

    fn substitute_one(&self, slot: usize, sign: i64, shift: &Rational) -> DPoly {
        let max_deg = self.terms.keys().map(|e| e[slot]).max().unwrap_or(0);
        let sign = Rational::from(sign);
        let shift_pows: Vec<Rational> = (0..=max_deg).map(|i| shift.pow(i)).collect();
        let sign_pows: Vec<Rational> = (0..=max_deg).map(|i| sign.pow(i)).collect();
        let mut out = DPoly::zero(self.legs);
        for (e, c) in &self.terms {
            let d = e[slot];
            for j in 0..=d {
                let factor = &(&Rational::binomial(d, j) * &sign_pows[j as usize])
                    * &shift_pows[(d - j) as usize];
                if factor.is_zero() {
                    continue;
                }
                let mut ne = *e;
                ne[slot] = j;
                out.add_term(ne, &c.scale(&factor));
            }
        }
        out
    }

    /// Replaces the variable at `slot` by the sum of two fresh adjacent
    /// variables; variables after `slot` move up by one.
    pub fn split_variable(&self, slot: usize) -> Result<DPoly, Error> {
        if self.legs >= MAX_LEGS {
            return Err(Error::LegCount {
                op: "split_variable",
                legs: self.legs,
            });
        }
        if slot >= self.legs {
            return Err(Error::SlotOutOfRange {
                slot,
                legs: self.legs,
            });
        }
        let mut out = DPoly::zero(self.legs + 1);
        for (e, c) in &self.terms {
            let d = e[slot];
            for j in 0..=d {
                let mut ne = [0; MAX_LEGS];
                ne[..slot].copy_from_slice(&e[..slot]);
                ne[slot] = j;
                ne[slot + 1] = d - j;
                ne[slot + 2..=self.legs].copy_from_slice(&e[slot + 1..self.legs]);
                out.add_term(ne, &c.scale(&Rational::binomial(d, j)));
            }
        }
        Ok(out)
    }

    /// Sets the variable at `slot` to zero and removes it, lowering the leg count.
    pub fn drop_variable(&self, slot: usize) -> Result<DPoly, Error> {
        if self.legs < 2 {
            return Err(Error::LegCount {
                op: "drop_variable",
                legs: self.legs,
            });
        }
        if slot >= self.legs {
            return Err(Error::SlotOutOfRange {
                slot,
                legs: self.legs,
            });
        }
        let mut out = DPoly::zero(self.legs - 1);
        for (e, c) in self.terms.iter().filter(|(e, _)| e[slot] == 0) {
            let mut ne = [0; MAX_LEGS];
            ne[..slot].copy_from_slice(&e[..slot]);
            ne[slot..self.legs - 1].copy_from_slice(&e[slot + 1..self.legs]);
            out.add_term(ne, c);
        }
        Ok(out)
    }

    /// Product of polynomials in disjoint variable sets: the variables of
    /// `rhs` are placed after those of `self`.
    pub fn tensor(&self, rhs: &DPoly) -> Result<DPoly, Error> {
        let legs = self.legs + rhs.legs;
        if legs > MAX_LEGS {
            return Err(Error::LegCount { op: "tensor", legs });
        }
        let mut out = DPoly::zero(legs);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                e[self.legs..legs].copy_from_slice(&eb[..rhs.legs]);
                out.add_term(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Re-embeds into `legs` variables with the old variable `i` moved to
    /// `positions[i]`.
    pub(crate) fn relabel(&self, legs: usize, positions: &[usize]) -> DPoly {
        let mut out = DPoly::zero(legs);
        for (e, c) in &self.terms {
            let mut ne = [0; MAX_LEGS];
            for (i, &p) in positions.iter().enumerate() {
                ne[p] = e[i];
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Evaluates every coefficient at `u = at`.
    pub fn specialize_u(&self, at: &Rational) -> DPoly {
        let mut out = DPoly::zero(self.legs);
        for (e, c) in &self.terms {
            out.add_term(*e, &UPoly::constant(c.evaluate(at)));
        }
        out
    }

    /// Exact value at `point` (one entry per variable) and `u`.
    pub fn evaluate(&self, point: &[Rational], u: &Rational) -> Result<Rational, Error> {
        if point.len() < self.legs {
            return Err(Error::MissingAssignment {
                variable: VARIABLE_NAMES[point.len()],
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.evaluate(u);
            for (x, &k) in point.iter().zip(e.iter()).take(self.legs) {
                if k > 0 {
                    m *= x.pow(k);
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Human-readable form, e.g. `(1-u)*x*y^2 + -1/2*z`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mono = render_exponents(e, self.legs, &VARIABLE_NAMES);
            match (mono.is_empty(), c.term_count()) {
                (true, _) => out.push_str(&c.render()),
                (false, _) if c.is_one() => out.push_str(&mono),
                (false, _) if (-c).is_one() => {
                    out.push('-');
                    out.push_str(&mono);
                }
                (false, 1) => {
                    let _ = write!(out, "{}*{mono}", c.render());
                }
                (false, _) => {
                    let _ = write!(out, "({})*{mono}", c.render());
                }
            }
        }
        out
    }
}

pub(crate) fn render_exponents(e: &Exponents, legs: usize, names: &[char]) -> String {
    let mut out = String::new();
    for (i, &k) in e.iter().enumerate().take(legs) {
        if k == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push(names[i]);
        if k > 1 {
            let _ = write!(out, "^{k}");
        }
    }
    out
}

/// Generalized binomial symbol `T(T-1)...(T-k+1)/k!` for a polynomial argument.
///
/// `binom_poly(T, 0)` is `1` for every `T`.
pub fn binom_poly(t: &DPoly, k: u32) -> DPoly {
    let mut acc = DPoly::one(t.legs());
    let mut factor = t.clone();
    let minus_one = DPoly::from_int(t.legs(), -1);
    for _ in 0..k {
        acc = acc.mul_unchecked(&factor);
        factor.add_assign_ref(&minus_one);
    }
    acc.scale_rational(&Rational::factorial(k).recip().expect("k! is nonzero"))
}

impl fmt::Debug for DPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DPoly[{}]({})", self.legs, self.render())
    }
}

impl fmt::Display for DPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Operators panic on leg-count mismatch; use the `try_*` methods to get an error instead.
impl Add<&DPoly> for &DPoly {
    type Output = DPoly;
    fn add(self, rhs: &DPoly) -> DPoly {
        self.try_add(rhs).expect("DPoly leg mismatch")
    }
}

impl Sub<&DPoly> for &DPoly {
    type Output = DPoly;
    fn sub(self, rhs: &DPoly) -> DPoly {
        self.try_sub(rhs).expect("DPoly leg mismatch")
    }
}

impl Mul<&DPoly> for &DPoly {
    type Output = DPoly;
    fn mul(self, rhs: &DPoly) -> DPoly {
        self.try_mul(rhs).expect("DPoly leg mismatch")
    }
}

impl Neg for &DPoly {
    type Output = DPoly;
    fn neg(self) -> DPoly {
        DPoly {
            legs: self.legs,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}
