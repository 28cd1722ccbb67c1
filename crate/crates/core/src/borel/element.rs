use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use super::{LegMonomial, Monomial};
use crate::exactalg::{DPoly, Exponents, Rational, UPoly};
use crate::{Error, MAX_LEGS};

/// Normal-ordered, κ-graded, truncated element of `U(b)^{⊗L}`.
///
/// Each term is `(P^{p_1} Q^{q_1} ⊗ … ⊗ P^{p_L} Q^{q_L}) · c(D_1, …, D_L)`:
/// momenta on the left of every leg, the dilatation polynomial on the right.
/// The κ-grade of a term is `Σ p_i`; terms above the truncation order are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    legs: usize,
    truncation: u32,
    terms: BTreeMap<Monomial, DPoly>,
}

/// Outcome of an exact comparison of two tensor elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    /// Sorted grades at which the two sides differ.
    pub failing_grades: Vec<u32>,
    /// Lowest-grade differing coefficient.
    pub first_difference: Option<Difference>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub grade: u32,
    pub monomial: Monomial,
    pub exponents: Exponents,
    pub left: UPoly,
    pub right: UPoly,
}

impl TensorElement {
    /// # Panics
    /// If `legs` is not in `1..=MAX_LEGS`.
    pub fn zero(legs: usize, truncation: u32) -> Self {
        assert!(
            (1..=MAX_LEGS).contains(&legs),
            "tensor elements have 1..={MAX_LEGS} legs, got {legs}"
        );
        TensorElement {
            legs,
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(legs: usize, truncation: u32) -> Self {
        Self::from_term(legs, truncation, Monomial::ONE, DPoly::one(legs))
    }

    /// Scalar multiple of the unit.
    pub fn scalar(legs: usize, truncation: u32, c: UPoly) -> Self {
        Self::from_term(legs, truncation, Monomial::ONE, DPoly::constant(legs, c))
    }

    /// Single term; dropped if its grade exceeds the truncation.
    pub fn from_term(legs: usize, truncation: u32, monomial: Monomial, coeff: DPoly) -> Self {
        let mut e = Self::zero(legs, truncation);
        e.add_term(monomial, &coeff);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, DPoly)>>(
        legs: usize,
        truncation: u32,
        terms: I,
    ) -> Self {
        let mut e = Self::zero(legs, truncation);
        for (m, c) in terms {
            e.add_term(m, &c);
        }
        e
    }

    /// One-leg `P^p Q^q · D^d`.
    pub fn leg_monomial(truncation: u32, p: u32, q: u32, d: u32) -> Self {
        let coeff = DPoly::monomial(1, [d, 0, 0], UPoly::one());
        Self::from_term(
            1,
            truncation,
            Monomial::new(&[LegMonomial::new(p, q)]),
            coeff,
        )
    }

    /// One-leg `P`, grade 1.
    pub fn p(truncation: u32) -> Self {
        Self::leg_monomial(truncation, 1, 0, 0)
    }

    /// One-leg transverse momentum probe `Q`, grade 0.
    pub fn q(truncation: u32) -> Self {
        Self::leg_monomial(truncation, 0, 1, 0)
    }

    /// One-leg dilatation `D`, grade 0.
    pub fn d(truncation: u32) -> Self {
        Self::leg_monomial(truncation, 0, 0, 1)
    }

    /// One-leg `P^p Q^q · c(D)`.
    pub fn one_leg(truncation: u32, p: u32, q: u32, coeff: DPoly) -> Self {
        Self::from_term(
            1,
            truncation,
            Monomial::new(&[LegMonomial::new(p, q)]),
            coeff,
        )
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (grade, monomial) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &DPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: &Monomial) -> DPoly {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(|| DPoly::zero(self.legs))
    }

    /// Lowest grade carried by a stored term; `None` for zero.
    pub fn min_grade(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::grade)
    }

    pub fn max_grade(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::grade)
    }

    pub(crate) fn add_term(&mut self, monomial: Monomial, coeff: &DPoly) {
        debug_assert_eq!(coeff.legs(), self.legs);
        if coeff.is_zero() || monomial.grade() > self.truncation {
            return;
        }
        match self.terms.get_mut(&monomial) {
            Some(slot) => {
                slot.add_assign_ref(coeff);
                if slot.is_zero() {
                    self.terms.remove(&monomial);
                }
            }
            None => {
                self.terms.insert(monomial, coeff.clone());
            }
        }
    }

    fn check_shape(&self, rhs: &TensorElement) -> Result<(), Error> {
        if self.legs != rhs.legs {
            return Err(Error::LegMismatch {
                left: self.legs,
                right: rhs.legs,
            });
        }
        if self.truncation != rhs.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: rhs.truncation,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &TensorElement) -> Result<TensorElement, Error> {
        self.check_shape(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &TensorElement) -> Result<TensorElement, Error> {
        self.try_add(&-rhs)
    }

    /// Product in `U(b)^{⊗L}`, reordered to normal form with
    /// `q(D) P^m Q^n = P^m Q^n q(D - m - n)` in every leg; terms above the
    /// truncation are dropped.
    pub fn normal_mul(&self, rhs: &TensorElement) -> Result<TensorElement, Error> {
        self.check_shape(rhs)?;
        let mut out = TensorElement::zero(self.legs, self.truncation);
        // Shifted copies of the left coefficient, keyed by the right monomial's shift.
        let mut cache: Vec<([i64; MAX_LEGS], DPoly)> = Vec::new();
        for (ma, ca) in &self.terms {
            let ga = ma.grade();
            cache.clear();
            for (mb, cb) in &rhs.terms {
                if ga + mb.grade() > self.truncation {
                    break;
                }
                let shift = mb.reorder_shift(self.legs);
                let shifted = if shift.iter().all(|&s| s == 0) {
                    ca
                } else {
                    match cache.iter().position(|(s, _)| *s == shift) {
                        Some(i) => &cache[i].1,
                        None => {
                            cache.push((shift, ca.translate(&shift[..self.legs])));
                            &cache.last().expect("just pushed").1
                        }
                    }
                };
                out.add_term(ma.mul(mb), &(shifted * cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> TensorElement {
        let mut acc = TensorElement::one(self.legs, self.truncation);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &UPoly) -> TensorElement {
        let mut out = TensorElement::zero(self.legs, self.truncation);
        for (m, p) in &self.terms {
            out.add_term(*m, &p.scale(c));
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> TensorElement {
        self.scale(&UPoly::constant(c.clone()))
    }

    /// The sub-element of exact κ-grade `n`.
    pub fn grade_slice(&self, n: u32) -> Result<TensorElement, Error> {
        if n > self.truncation {
            return Err(Error::GradeOutOfRange {
                grade: n,
                truncation: self.truncation,
            });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.grade() == n)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Ok(TensorElement {
            legs: self.legs,
            truncation: self.truncation,
            terms,
        })
    }

    /// Same element viewed at a lower (or equal) truncation order.
    pub fn truncate(&self, truncation: u32) -> TensorElement {
        let truncation = truncation.min(self.truncation);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.grade() <= truncation)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        TensorElement {
            legs: self.legs,
            truncation,
            terms,
        }
    }

    /// Evaluates every `u`-coefficient at `u0`.
    pub fn specialize_u(&self, u0: &Rational) -> TensorElement {
        let mut out = TensorElement::zero(self.legs, self.truncation);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.specialize_u(u0));
        }
        out
    }

    /// Applies `f` to every coefficient, keeping the monomials.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Monomial, &DPoly) -> DPoly) -> TensorElement {
        let mut out = TensorElement::zero(self.legs, self.truncation);
        for (m, c) in &self.terms {
            out.add_term(*m, &f(m, c));
        }
        out
    }

    /// Exact canonical comparison, reporting the lowest-grade differing term.
    pub fn equals(&self, rhs: &TensorElement) -> Result<Comparison, Error> {
        let diff = self.try_sub(rhs)?;
        let mut failing_grades: Vec<u32> = diff.terms.keys().map(Monomial::grade).collect();
        failing_grades.dedup();
        let first_difference = diff.terms.iter().next().map(|(m, d)| {
            let (exps, _) = d.terms().next().expect("stored coefficients are nonzero");
            Difference {
                grade: m.grade(),
                monomial: *m,
                exponents: *exps,
                left: self.coeff(m).coeff(exps),
                right: rhs.coeff(m).coeff(exps),
            }
        });
        Ok(Comparison {
            equal: diff.is_zero(),
            failing_grades,
            first_difference,
        })
    }

    /// `a ⊗ b`, with the legs of `rhs` placed after those of `self`.
    pub fn tensor(&self, rhs: &TensorElement) -> Result<TensorElement, Error> {
        let legs = self.legs + rhs.legs;
        if legs > MAX_LEGS {
            return Err(Error::LegCount { op: "tensor", legs });
        }
        if self.truncation != rhs.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: rhs.truncation,
            });
        }
        let mut out = TensorElement::zero(legs, self.truncation);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if ma.grade() + mb.grade() > self.truncation {
                    break;
                }
                let mut m = *ma;
                for i in 0..rhs.legs {
                    m.set_leg(self.legs + i, mb.leg(i));
                }
                out.add_term(m, &ca.tensor(cb)?);
            }
        }
        Ok(out)
    }

    /// Places leg `i` of `self` at `positions[i]` of a `legs`-leg element,
    /// filling the remaining legs with `1`; `F ⊗ 1` is `embed(3, &[0, 1])`.
    pub fn embed(&self, legs: usize, positions: &[usize]) -> Result<TensorElement, Error> {
        if legs > MAX_LEGS || positions.len() != self.legs {
            return Err(Error::LegCount { op: "embed", legs });
        }
        let mut seen = [false; MAX_LEGS];
        for &p in positions {
            if p >= legs || seen[p] {
                return Err(Error::SlotOutOfRange { slot: p, legs });
            }
            seen[p] = true;
        }
        let mut out = TensorElement::zero(legs, self.truncation);
        for (m, c) in &self.terms {
            let mut nm = Monomial::ONE;
            for (i, &p) in positions.iter().enumerate() {
                nm.set_leg(p, m.leg(i));
            }
            out.add_term(nm, &c.relabel(legs, positions));
        }
        Ok(out)
    }

    /// Splits every term into per-leg one-leg factors, one product per
    /// monomial of the dilatation polynomial: `(coefficient, [f_1, …, f_L])`.
    pub(crate) fn leg_factors(&self) -> Vec<(UPoly, Vec<TensorElement>)> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            for (exps, coeff) in c.terms() {
                let factors = (0..self.legs)
                    .map(|i| {
                        let leg = m.leg(i);
                        TensorElement::leg_monomial(self.truncation, leg.p, leg.q, exps[i])
                    })
                    .collect();
                out.push((coeff.clone(), factors));
            }
        }
        out
    }

    /// Text rendering: one line per (momentum monomial, dilatation monomial),
    /// e.g. `(1-u)/κ · P⊗D`.
    pub fn render(&self, ascii: bool) -> String {
        let (kappa, otimes, dot) = if ascii {
            ("kappa", "(x)", "*")
        } else {
            ("κ", "⊗", "·")
        };
        let mut out = String::new();
        if self.is_zero() {
            out.push_str("0\n");
            return out;
        }
        for (m, c) in &self.terms {
            let grade = m.grade();
            for (exps, coeff) in c.terms() {
                let mut tensor = String::new();
                for (i, &e) in exps.iter().enumerate().take(self.legs) {
                    if i > 0 {
                        tensor.push_str(otimes);
                    }
                    tensor.push_str(&render_leg(m.leg(i), e));
                }
                let multi = coeff.term_count() > 1 || coeff.terms().any(|(_, r)| !r.is_integer());
                let mut scalar = coeff.render();
                if grade == 0 {
                    if coeff.is_one() {
                        scalar.clear();
                    } else if (-coeff).is_one() {
                        scalar = String::from("-");
                    } else {
                        if multi {
                            scalar = alloc::format!("({scalar})");
                        }
                        scalar.push(' ');
                        scalar.push_str(dot);
                        scalar.push(' ');
                    }
                } else {
                    if multi {
                        scalar = alloc::format!("({scalar})");
                    }
                    let _ = write!(scalar, "/{kappa}");
                    if grade > 1 {
                        let _ = write!(scalar, "^{grade}");
                    }
                    let _ = write!(scalar, " {dot} ");
                }
                let _ = writeln!(out, "{scalar}{tensor}");
            }
        }
        out
    }
}

fn render_leg(leg: LegMonomial, d: u32) -> String {
    let mut s = String::new();
    for (name, k) in [('P', leg.p), ('Q', leg.q), ('D', d)] {
        if k == 0 {
            continue;
        }
        s.push(name);
        if k > 1 {
            let _ = write!(s, "^{k}");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "TensorElement(legs={}, N={}) {{",
            self.legs, self.truncation
        )?;
        for (m, c) in &self.terms {
            let mono: Vec<String> = (0..self.legs).map(|i| render_leg(m.leg(i), 0)).collect();
            writeln!(f, "  [{}] {}", mono.join("⊗"), c.render())?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// The operators panic on shape mismatch; the `try_*`/`normal_mul` methods
/// return an error instead.
impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.try_add(rhs).expect("tensor shape mismatch")
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.try_sub(rhs).expect("tensor shape mismatch")
    }
}

impl Mul<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.normal_mul(rhs).expect("tensor shape mismatch")
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            legs: self.legs,
            truncation: self.truncation,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        -&self
    }
}
